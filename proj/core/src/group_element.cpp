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

#include "cnotdihedral/group_element.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace cnotdihedral {

namespace {

constexpr uint32_t MAX_QUBITS = 16;

void check_qubit_count(uint32_t n) {
    if (n < 1 || n > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(MAX_QUBITS) +
                                    "], got " + std::to_string(n));
    }
}

void check_qubit_index(uint32_t q, uint32_t n) {
    if (q >= n) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range for n=" +
                                    std::to_string(n));
    }
}

void check_same_shape(const GroupElement &u, const GroupElement &v) {
    if (u.n != v.n) {
        throw std::invalid_argument("qubit counts differ: " + std::to_string(u.n) + " vs " +
                                    std::to_string(v.n));
    }
    if (u.mod != v.mod) {
        throw std::invalid_argument("moduli differ: " + std::to_string(u.mod.m) + " vs " +
                                    std::to_string(v.mod.m));
    }
}

// Invert the linear part over F_2 by Gauss-Jordan elimination on row masks.
// Throws if singular.
std::vector<uint32_t> invert_rows(const std::vector<uint32_t> &rows, uint32_t n) {
    std::vector<uint32_t> a = rows;
    std::vector<uint32_t> inv(n);
    for (uint32_t q = 0; q < n; q++) {
        inv[q] = 1u << (n - 1 - q);
    }
    for (uint32_t c = 0; c < n; c++) {
        uint32_t bit = 1u << (n - 1 - c);
        uint32_t pivot = c;
        while (pivot < n && !(a[pivot] & bit)) {
            pivot++;
        }
        if (pivot == n) {
            throw std::invalid_argument("linear part is singular");
        }
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        for (uint32_t r = 0; r < n; r++) {
            if (r != c && (a[r] & bit)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    return inv;
}

uint32_t apply_linear(const std::vector<uint32_t> &rows, uint32_t n, uint32_t index) {
    uint32_t out = 0;
    for (uint32_t q = 0; q < n; q++) {
        out |= static_cast<uint32_t>(std::popcount(rows[q] & index) & 1) << (n - 1 - q);
    }
    return out;
}

void append_le32(std::string &s, uint32_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
}

// Pack a mask given in basis-index bit layout (qubit q at bit n-1-q) into
// ceil(n/8) bytes with qubit q at bit position q.
void append_qubit_mask(std::string &s, uint32_t mask, uint32_t n) {
    uint32_t packed = 0;
    for (uint32_t q = 0; q < n; q++) {
        packed |= ((mask >> (n - 1 - q)) & 1u) << q;
    }
    for (uint32_t byte = 0; byte < (n + 7) / 8; byte++) {
        s.push_back(static_cast<char>((packed >> (8 * byte)) & 0xff));
    }
}

}  // namespace

Modulus::Modulus(uint32_t m_value) : m(m_value) {
    if (m < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
    }
    d = (m % 2 == 0) ? 2 : 1;
    two_m = 2 * m;
    cs_order = m / d;
}

GroupElement GroupElement::identity(uint32_t n, uint32_t m) {
    check_qubit_count(n);
    GroupElement e{n, Modulus(m), std::vector<uint32_t>(n), 0, PhaseTable(size_t{1} << n, 0)};
    for (uint32_t q = 0; q < n; q++) {
        e.rows[q] = 1u << (n - 1 - q);
    }
    return e;
}

GroupElement GroupElement::x_at(uint32_t q, uint32_t n, uint32_t m) {
    GroupElement e = identity(n, m);
    check_qubit_index(q, n);
    e.flip = 1u << (n - 1 - q);
    return e;
}

GroupElement GroupElement::t_at(uint32_t q, uint32_t k, uint32_t n, uint32_t m) {
    GroupElement e = identity(n, m);
    check_qubit_index(q, n);
    if (k >= m) {
        throw std::invalid_argument("T exponent " + std::to_string(k) + " out of range for m=" +
                                    std::to_string(m));
    }
    for (uint32_t i = 0; i < e.dim(); i++) {
        e.phases[i] = e.mod.reduce(int64_t{2} * k * e.qubit_bit(i, q));
    }
    return e;
}

GroupElement GroupElement::cx_at(uint32_t ctrl, uint32_t tgt, uint32_t n, uint32_t m) {
    GroupElement e = identity(n, m);
    check_qubit_index(ctrl, n);
    check_qubit_index(tgt, n);
    if (ctrl == tgt) {
        throw std::invalid_argument("CX control and target must differ");
    }
    e.rows[tgt] |= 1u << (n - 1 - ctrl);
    return e;
}

GroupElement GroupElement::cs_at(uint32_t a, uint32_t b, uint32_t e_pow, uint32_t n, uint32_t m) {
    GroupElement e = identity(n, m);
    check_qubit_index(a, n);
    check_qubit_index(b, n);
    if (a == b) {
        throw std::invalid_argument("CS qubits must differ");
    }
    if (e_pow >= e.mod.cs_order) {
        throw std::invalid_argument("CS exponent " + std::to_string(e_pow) +
                                    " out of range for m=" + std::to_string(m));
    }
    for (uint32_t i = 0; i < e.dim(); i++) {
        e.phases[i] = e.mod.reduce(int64_t{4} * e_pow * e.qubit_bit(i, a) * e.qubit_bit(i, b));
    }
    return e;
}

uint32_t GroupElement::apply(uint32_t index) const {
    return apply_linear(rows, n, index) ^ flip;
}

bool GroupElement::operator==(const GroupElement &other) const {
    return n == other.n && mod == other.mod && flip == other.flip && rows == other.rows &&
           phases == other.phases;
}

GroupElement compose(const GroupElement &u, const GroupElement &v) {
    check_same_shape(u, v);
    uint32_t n = u.n;
    GroupElement out{n, u.mod, std::vector<uint32_t>(n), 0, PhaseTable(u.dim())};
    for (uint32_t q = 0; q < n; q++) {
        uint32_t mask = 0;
        uint32_t row = u.rows[q];
        while (row) {
            uint32_t bit = row & (~row + 1);
            mask ^= v.rows[n - 1 - static_cast<uint32_t>(std::countr_zero(bit))];
            row ^= bit;
        }
        out.rows[q] = mask;
    }
    out.flip = u.apply(v.flip);
    uint32_t offset = u.phases[v.apply(0)];
    for (uint32_t i = 0; i < out.dim(); i++) {
        out.phases[i] =
            u.mod.reduce(int64_t{v.phases[i]} + u.phases[v.apply(i)] - offset);
    }
    return out;
}

GroupElement inverse(const GroupElement &u) {
    GroupElement out{u.n, u.mod, invert_rows(u.rows, u.n), 0, PhaseTable(u.dim())};
    out.flip = apply_linear(out.rows, u.n, u.flip);
    // f^{-1}(0) == out.flip, so the offset below renormalizes phases[0] to 0.
    uint32_t offset = u.phases[out.flip];
    for (uint32_t i = 0; i < out.dim(); i++) {
        uint32_t pre = apply_linear(out.rows, u.n, i) ^ out.flip;
        out.phases[i] = u.mod.reduce(int64_t{offset} - u.phases[pre]);
    }
    return out;
}

GroupElement element_from_raw(uint32_t n, uint32_t m, std::vector<uint32_t> rows, uint32_t flip,
                              const std::vector<int64_t> &raw_phases) {
    check_qubit_count(n);
    if (rows.size() != n || raw_phases.size() != (size_t{1} << n)) {
        throw std::invalid_argument("raw part sizes do not match qubit count");
    }
    invert_rows(rows, n);  // invertibility check only
    GroupElement out{n, Modulus(m), std::move(rows), flip, PhaseTable(size_t{1} << n)};
    for (size_t i = 0; i < out.phases.size(); i++) {
        out.phases[i] = out.mod.reduce(raw_phases[i] - raw_phases[0]);
    }
    return out;
}

std::string canonical_key(const GroupElement &u) {
    std::string key;
    key.reserve(1 + 4 + (u.n + 1) * ((u.n + 7) / 8) + 4 * u.dim());
    key.push_back(static_cast<char>(u.n));
    append_le32(key, u.mod.m);
    for (uint32_t q = 0; q < u.n; q++) {
        append_qubit_mask(key, u.rows[q], u.n);
    }
    append_qubit_mask(key, u.flip, u.n);
    for (uint32_t i = 0; i < u.dim(); i++) {
        append_le32(key, u.phases[i]);
    }
    return key;
}

PhaseCoefficients phase_coefficients(const GroupElement &u) {
    PhaseCoefficients out{u.n, u.mod, u.phases};
    // In-place Mobius transform over the subset lattice.
    for (uint32_t bit = 0; bit < u.n; bit++) {
        uint32_t mask = 1u << bit;
        for (uint32_t i = 0; i < out.by_subset.size(); i++) {
            if (i & mask) {
                out.by_subset[i] =
                    u.mod.reduce(int64_t{out.by_subset[i]} - out.by_subset[i ^ mask]);
            }
        }
    }
    return out;
}

bool coefficient_allowed(uint32_t value, uint32_t subset_size, const Modulus &mod) {
    if (subset_size < 2) {
        return true;
    }
    uint64_t pow2 = uint64_t{1} << std::min<uint32_t>(subset_size - 1, 40);
    uint64_t g = std::gcd(pow2, uint64_t{mod.two_m});
    return value % g == 0;
}

PhaseTable phase_table_from_coefficients(const PhaseCoefficients &coeffs) {
    check_qubit_count(coeffs.n);
    if (coeffs.by_subset.size() != (size_t{1} << coeffs.n)) {
        throw std::invalid_argument("coefficient count does not match qubit count");
    }
    if (coeffs.by_subset[0] != 0) {
        throw std::invalid_argument("empty-set coefficient must be zero");
    }
    for (uint32_t s = 0; s < coeffs.by_subset.size(); s++) {
        if (coeffs.by_subset[s] >= coeffs.mod.two_m) {
            throw std::invalid_argument("coefficient out of range mod 2m");
        }
        if (!coefficient_allowed(coeffs.by_subset[s], std::popcount(s), coeffs.mod)) {
            throw std::invalid_argument("coefficient for a size-" +
                                        std::to_string(std::popcount(s)) +
                                        " subset must be divisible by 2^" +
                                        std::to_string(std::popcount(s) - 1));
        }
    }
    PhaseTable table = coeffs.by_subset;
    // Zeta transform: accumulate subset sums.
    for (uint32_t bit = 0; bit < coeffs.n; bit++) {
        uint32_t mask = 1u << bit;
        for (uint32_t i = 0; i < table.size(); i++) {
            if (i & mask) {
                table[i] = coeffs.mod.reduce(int64_t{table[i]} + table[i ^ mask]);
            }
        }
    }
    return table;
}

}  // namespace cnotdihedral
