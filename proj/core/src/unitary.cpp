// Copyright 2026 The cnotdihedral authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cnotdihedral/unitary.hpp"

#include <stdexcept>

namespace cnotdihedral {

MonomialMatrix identity_unitary(uint32_t n, uint32_t m) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("unitary materialization is capped at 10 qubits");
    }
    MonomialMatrix u{n, Modulus(m), std::vector<uint32_t>(size_t{1} << n),
                     std::vector<uint32_t>(size_t{1} << n, 0)};
    for (uint32_t i = 0; i < u.row_of.size(); i++) {
        u.row_of[i] = i;
    }
    return u;
}

MonomialMatrix to_unitary(const GroupElement &el) {
    MonomialMatrix u = identity_unitary(el.n, el.mod.m);
    for (uint32_t x = 0; x < u.row_of.size(); x++) {
        u.row_of[x] = el.apply(x);
        u.exp_of[x] = el.phases[x];
    }
    return u;
}

MonomialMatrix gate_unitary(const Gate &g, uint32_t n, uint32_t m) {
    MonomialMatrix u = identity_unitary(n, m);
    auto bit = [&](uint32_t x, uint32_t q) { return (x >> (n - 1 - q)) & 1u; };
    for (uint32_t x = 0; x < u.row_of.size(); x++) {
        switch (g.kind) {
            case GateKind::X:
                u.row_of[x] = x ^ (1u << (n - 1 - g.a));
                break;
            case GateKind::T:
                u.exp_of[x] = u.mod.reduce(int64_t{2} * g.e * bit(x, g.a));
                break;
            case GateKind::CX:
                if (bit(x, g.a)) {
                    u.row_of[x] = x ^ (1u << (n - 1 - g.b));
                }
                break;
            case GateKind::CS:
                u.exp_of[x] = u.mod.reduce(int64_t{4} * g.e * bit(x, g.a) * bit(x, g.b));
                break;
        }
    }
    return u;
}

MonomialMatrix multiply(const MonomialMatrix &u, const MonomialMatrix &v) {
    if (u.n != v.n || u.mod != v.mod) {
        throw std::invalid_argument("monomial matrix shapes differ");
    }
    MonomialMatrix out = u;
    for (uint32_t x = 0; x < out.row_of.size(); x++) {
        out.row_of[x] = u.row_of[v.row_of[x]];
        out.exp_of[x] = u.mod.reduce(int64_t{v.exp_of[x]} + u.exp_of[v.row_of[x]]);
    }
    return out;
}

bool equal_up_to_global_phase(const MonomialMatrix &a, const MonomialMatrix &b) {
    if (a.n != b.n || a.mod != b.mod || a.row_of != b.row_of) {
        return false;
    }
    uint32_t shift = a.mod.reduce(int64_t{a.exp_of[0]} - b.exp_of[0]);
    for (uint32_t x = 0; x < a.exp_of.size(); x++) {
        if (a.mod.reduce(int64_t{a.exp_of[x]} - b.exp_of[x]) != shift) {
            return false;
        }
    }
    return true;
}

}  // namespace cnotdihedral
