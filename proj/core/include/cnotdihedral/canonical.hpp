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

#ifndef CNOTDIHEDRAL_CANONICAL_HPP_
#define CNOTDIHEDRAL_CANONICAL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/group_element.hpp"
#include "cnotdihedral/rng.hpp"

namespace cnotdihedral {

// The four shapes a two-qubit element can take, keyed by how many CX gates
// its canonical circuit needs when CS is available.
enum class FormClass : uint8_t {
    CSDihedral,  // dihedral factors and a CS power; no CX at all
    CXLike,      // one CX with a trailing T on its target
    DoubleCX,    // back-to-back CX pair in both orders
    TripleCX,    // the three-CX swap pattern
};

const char *form_class_name(FormClass cls);

// Unique decomposition of a two-qubit element:
//   CSDihedral:  CS^e * X0^k X1^k' * T0^l T1^l'
//   CXLike:      X0^k X1^k' T0^l T1^l' * CX_{i,j} * T_j^e
//   DoubleCX:    X0^k X1^k' T0^l T1^l' * CX_{i,j} CX_{j,i} * T_j^e
//   TripleCX:    X0^k X1^k' T0^l T1^l' * CX_{0,1} CX_{1,0} * T_1^e * CX_{0,1}
// with k, k' in {0,1}, l, l' in [0, m) and e in [0, m/d).  dir picks
// (i,j) = (0,1) or (1,0); it is always 0 for CSDihedral and TripleCX.
struct CanonicalForm {
    FormClass cls = FormClass::CSDihedral;
    uint8_t dir = 0;
    uint32_t k = 0;
    uint32_t kp = 0;
    uint32_t l = 0;
    uint32_t lp = 0;
    uint32_t e = 0;

    friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
};

// 24 m^3 / d, the group order for two qubits.
uint64_t form_count(uint32_t m);
// 4 m^3 / d for the single-direction classes, 8 m^3 / d for the others.
uint64_t class_count(FormClass cls, uint32_t m);

// Bijection between forms and [0, form_count(m)).  Blocks run CSDihedral,
// CXLike dir 0, CXLike dir 1, DoubleCX dir 0, DoubleCX dir 1, TripleCX;
// inside a block (k, k', l, l', e) counts up with e fastest.
uint64_t form_index(const CanonicalForm &form, uint32_t m);
CanonicalForm form_from_index(uint32_t m, uint64_t index);

std::vector<CanonicalForm> enumerate_forms(uint32_t m);
void for_each_form(uint32_t m, const std::function<void(const CanonicalForm &)> &fn);

// Canonical circuit of the form (two qubits, gates in time order, identity
// factors omitted).  Its entangling-gate count is minimal for the element.
Circuit form_to_circuit(const CanonicalForm &form, uint32_t m);

// The element the form denotes, built directly from the phase formulas
// rather than by evaluating the circuit.
GroupElement form_to_element(const CanonicalForm &form, uint32_t m);

// Inverts form_to_element.  Throws std::invalid_argument unless `el` is a
// two-qubit element with a consistent phase table; the result is checked by
// rebuilding the element before it is returned.
CanonicalForm classify(const GroupElement &el);

// Exhaustive key -> form table for one modulus.  Memory grows as m^3, so
// construction refuses m > 64.
class CanonicalLookup {
  public:
    explicit CanonicalLookup(uint32_t m);

    uint32_t modulus() const { return m_; }
    uint64_t size() const { return table_.size(); }
    bool contains(const GroupElement &el) const;
    std::optional<CanonicalForm> form_of(const GroupElement &el) const;

  private:
    uint32_t m_;
    std::unordered_map<std::string, uint64_t> table_;
};

// Entangling costs of one form class, measured two ways: `free_*` counts CX
// when CS powers cost nothing, `pure_*` counts CX over {X, T, CX} alone.
struct ClassCostStats {
    FormClass cls = FormClass::CSDihedral;
    uint64_t count = 0;
    uint32_t free_min = 0;
    uint32_t free_max = 0;
    uint32_t pure_min = 0;
    uint32_t pure_max = 0;
};

struct ClassCostReport {
    uint32_t m = 0;
    std::vector<ClassCostStats> stats;  // one entry per class, enum order
    // Whether the two cost notions separate cleanly: CSDihedral elements are
    // free once CS is free, and every other class costs the same number of
    // CX with or without free CS powers.
    bool no_mixing = false;
};

ClassCostReport verify_class_costs(uint32_t m, uint64_t budget = 10'000'000);

// Uniform draw over the full two-qubit group via the index bijection.
CanonicalForm sample_uniform(uint32_t m, Rng &rng);
CanonicalForm sample_uniform(uint32_t m, uint64_t seed);

}  // namespace cnotdihedral

#endif  // CNOTDIHEDRAL_CANONICAL_HPP_
