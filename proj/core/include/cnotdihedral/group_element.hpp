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

#include <cstdint>
#include <string>
#include <vector>

namespace cnotdihedral {

/// Phase modulus bundle. Phases are tracked as integers mod 2m in units of
/// pi/m, so a T gate contributes +2 and a CS gate contributes +4 per basis
/// state it acts on. `d = gcd(m, 2)` and `cs_order = m/d` is the order of CS.
struct Modulus {
    uint32_t m;
    uint32_t d;
    uint32_t two_m;
    uint32_t cs_order;

    explicit Modulus(uint32_t m_value);

    /// Reduce an arbitrary signed value into [0, 2m).
    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(two_m);
        if (r < 0) {
            r += two_m;
        }
        return static_cast<uint32_t>(r);
    }

    bool operator==(const Modulus &other) const {
        return m == other.m;
    }
    bool operator!=(const Modulus &other) const {
        return m != other.m;
    }
};

/// One element of the group generated by X, T = diag(1, e^{2*pi*i/m}) and CX,
/// taken modulo global phase.
///
/// The element acts on basis states as U|x> = e^{i*pi*phases[x]/m} |f(x)>
/// where f(x) = Ax + b is an invertible affine map over F_2.
///
/// Bit conventions, used consistently everywhere:
///   - Qubit 0 is the most significant bit of a basis index: qubit q lives at
///     bit position n-1-q. The phase table is indexed directly by basis index,
///     which is lexicographic order over the tuple (x_0, ..., x_{n-1}).
///   - rows[q] is the mask (over basis-index bit positions) of input qubits
///     feeding output qubit q, i.e. output bit q = parity(rows[q] & x).
///   - flip is b in the same mask layout.
///   - phases has 2^n entries in [0, 2m) and phases[0] == 0; the latter fixes
///     the global-phase representative.
class GroupElement {
  public:
    uint32_t n;
    Modulus mod;
    std::vector<uint32_t> rows;
    uint32_t flip;
    std::vector<uint32_t> phases;

    static GroupElement identity(uint32_t n, uint32_t m);
    static GroupElement x_at(uint32_t q, uint32_t n, uint32_t m);
    /// T^k on qubit q. Requires 0 <= k < m.
    static GroupElement t_at(uint32_t q, uint32_t k, uint32_t n, uint32_t m);
    static GroupElement cx_at(uint32_t ctrl, uint32_t tgt, uint32_t n, uint32_t m);
    /// CS^e on the (a, b) pair. Requires 0 <= e < m/d. Symmetric in a and b.
    static GroupElement cs_at(uint32_t a, uint32_t b, uint32_t e, uint32_t n, uint32_t m);

    /// Apply the affine part to a basis index.
    uint32_t apply(uint32_t index) const;

    /// Extract the bit of `index` belonging to qubit q.
    uint32_t qubit_bit(uint32_t index, uint32_t q) const {
        return (index >> (n - 1 - q)) & 1u;
    }

    size_t dim() const {
        return size_t{1} << n;
    }

    bool operator==(const GroupElement &other) const;
    bool operator!=(const GroupElement &other) const {
        return !(*this == other);
    }
};

/// Matrix product u*v: v is applied first. Throws if n or m disagree.
GroupElement compose(const GroupElement &u, const GroupElement &v);

GroupElement inverse(const GroupElement &u);

/// Build a normalized element from raw parts: the phase table is shifted so
/// that phases[0] == 0 and every entry is reduced mod 2m. The affine part must
/// be invertible.
GroupElement element_from_raw(uint32_t n, uint32_t m, std::vector<uint32_t> rows, uint32_t flip,
                              const std::vector<int64_t> &raw_phases);

/// Opaque hashable key. Two elements are equal iff their keys are equal.
///
/// Byte layout (documented so dumps are reproducible across builds):
///   n      : 1 byte
///   m      : 4 bytes little-endian
///   A      : n row groups of ceil(n/8) bytes; bit p of byte k in a row group
///            is the matrix entry for input qubit 8k+p
///   b      : one ceil(n/8)-byte group in the same bit order
///   phases : 2^n values, 4 bytes little-endian each, in basis-index order
std::string canonical_key(const GroupElement &u);

using PhaseTable = std::vector<uint32_t>;

/// Mobius coefficients of the phase table over the subset lattice: the table
/// is recovered as p(x) = sum over subsets s of x of by_subset[s], all mod 2m.
/// Subset masks use the same bit layout as basis indices.
struct PhaseCoefficients {
    uint32_t n;
    Modulus mod;
    std::vector<uint32_t> by_subset;
};

PhaseCoefficients phase_coefficients(const GroupElement &u);

/// Inverse (zeta) transform. Throws if the coefficients violate the constraint
/// that a subset of size s must carry a multiple of 2^{s-1} in Z_2m, or if the
/// empty-set coefficient is nonzero.
PhaseTable phase_table_from_coefficients(const PhaseCoefficients &coeffs);

/// The divisibility constraint for one coefficient: membership of `value` in
/// the subgroup 2^{subset_size-1} * Z_2m.
bool coefficient_allowed(uint32_t value, uint32_t subset_size, const Modulus &mod);

}  // namespace cnotdihedral
