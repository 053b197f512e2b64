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

#ifndef CNOTDIHEDRAL_LAYERS_HPP_
#define CNOTDIHEDRAL_LAYERS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/group_element.hpp"

namespace cnotdihedral {

// Which entangling gate counts toward the cost being stratified.
enum class LayerMode : uint8_t {
    CX,  // layer r = elements of minimal CX count r over {X, T, CX}
    CS,  // layer r = elements of minimal CS count r over {X, T, CS, CS^-1}
};

struct CostWitness {
    uint32_t cost = 0;
    Circuit circuit;  // realizes the element with exactly `cost` counted gates
};

struct LayerEntry {
    GroupElement element;
    Circuit witness;  // first witness found in deterministic generation order
};

// One row of the growth accounting.  step_candidates counts products formed
// while building layer r (the seed products for r = 0); step_bound is the
// closed-form cap seed * branch^r, saturated at uint64 max.  The cum_ fields
// are prefix sums of the two.  Layer sizes obey size <= step_candidates.
struct LayerRow {
    uint32_t r = 0;
    uint64_t size = 0;
    uint64_t growth_bound = 0;  // branch^r
    uint64_t step_candidates = 0;
    uint64_t step_bound = 0;  // seed * branch^r
    uint64_t cum_candidates = 0;
    uint64_t cum_bound = 0;
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

// Breadth-first stratification of the group by entangling-gate count.
//
// Layer 0 is every product of per-qubit X^k T^l factors ((2m)^n elements).
// A CX step forms T_j^l * CX_{i,j} * U' for each ordered pair i != j and
// l in [0, m/d); a CS step forms CS_{i,j}^e * U' for each pair i < j with
// e = 1 and e = -1.  An element is kept the first time it appears, so its
// layer index is its exact minimal counted-gate cost and its witness attains
// that cost.  Candidate generation order is deterministic: previous layer in
// key order, then (i, j), then the exponent.  Sealed layers are sorted by
// canonical_key.
//
// `budget` caps the total number of candidate products ever formed; crossing
// it throws BudgetExceeded.
class LayerSet {
  public:
    LayerSet(LayerMode mode, uint32_t n, uint32_t m, uint64_t budget = 10'000'000);

    LayerMode mode() const { return mode_; }
    uint32_t qubits() const { return n_; }
    uint32_t modulus() const { return m_; }

    // Number of distinct extension products per element: (m/d) n (n-1) for
    // CX steps, n (n-1) for CS steps (the +1/-1 choice per unordered pair).
    uint64_t branch_factor() const;

    // Builds the next layer; returns false (and adds nothing) once closed.
    bool extend();
    void extend_to(uint32_t rmax);

    // Highest layer index built so far.
    uint32_t depth() const { return static_cast<uint32_t>(layers_.size()) - 1; }
    // True once an extension step produced no new elements.
    bool closed() const { return closed_; }

    const std::vector<LayerEntry> &layer(uint32_t r) const { return layers_.at(r); }
    std::vector<uint64_t> layer_sizes() const;
    uint64_t total() const;

    // Minimal counted-gate cost of `el`, extending the stratification as
    // needed.  Empty if the group closes without reaching `el`.
    std::optional<CostWitness> min_cost(const GroupElement &el);

    std::vector<LayerRow> bound_report() const;

  private:
    struct Ref {
        uint32_t layer;
        uint32_t index;
    };

    void seed();
    uint64_t seed_size() const;
    void charge(uint64_t candidates);

    LayerMode mode_;
    uint32_t n_;
    uint32_t m_;
    Modulus mod_;
    uint64_t budget_;
    uint64_t spent_ = 0;
    bool closed_ = false;
    std::vector<std::vector<LayerEntry>> layers_;
    std::vector<uint64_t> step_candidates_;  // per layer, seed products for r=0
    std::unordered_map<std::string, Ref> index_;
};

}  // namespace cnotdihedral

#endif  // CNOTDIHEDRAL_LAYERS_HPP_
