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

#pragma once

#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/group_element.hpp"

namespace cnotdihedral {

/// Exact 2^n x 2^n monomial matrix: one nonzero entry per column, at
/// (row_of[col], col), holding the root-of-unity exponent exp_of[col] mod 2m
/// in units of pi/m. No floating point anywhere.
struct MonomialMatrix {
    uint32_t n;
    Modulus mod;
    std::vector<uint32_t> row_of;
    std::vector<uint32_t> exp_of;

    bool operator==(const MonomialMatrix &other) const {
        return n == other.n && mod == other.mod && row_of == other.row_of &&
               exp_of == other.exp_of;
    }
};

MonomialMatrix identity_unitary(uint32_t n, uint32_t m);

/// Materialize a group element. Capped at n <= 10.
MonomialMatrix to_unitary(const GroupElement &u);

/// The unitary of a single gate, built directly from the gate's action on
/// basis states (independent of the GroupElement code path, so products of
/// these serve as an oracle for evaluate + to_unitary).
MonomialMatrix gate_unitary(const Gate &g, uint32_t n, uint32_t m);

/// Matrix product u*v (v applied first).
MonomialMatrix multiply(const MonomialMatrix &u, const MonomialMatrix &v);

/// Equality after quotienting by a single overall root-of-unity factor.
bool equal_up_to_global_phase(const MonomialMatrix &a, const MonomialMatrix &b);

}  // namespace cnotdihedral
