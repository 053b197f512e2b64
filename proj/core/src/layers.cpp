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

#include "cnotdihedral/layers.hpp"

#include <algorithm>
#include <limits>

namespace cnotdihedral {

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) {
    if (b > std::numeric_limits<uint64_t>::max() - a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a + b;
}

uint64_t sat_pow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; i++) {
        r = sat_mul(r, base);
    }
    return r;
}

}  // namespace

LayerSet::LayerSet(LayerMode mode, uint32_t n, uint32_t m, uint64_t budget)
    : mode_(mode), n_(n), m_(m), mod_(m), budget_(budget) {
    if (n < 1 || n > 16) {
        throw std::invalid_argument("layer stratification supports 1..16 qubits");
    }
    seed();
}

uint64_t LayerSet::branch_factor() const {
    uint64_t pairs = uint64_t{n_} * (n_ - 1);
    if (mode_ == LayerMode::CX) {
        return sat_mul(mod_.cs_order, pairs);
    }
    return pairs;
}

uint64_t LayerSet::seed_size() const {
    return sat_pow(uint64_t{2} * m_, n_);
}

void LayerSet::charge(uint64_t candidates) {
    spent_ = sat_add(spent_, candidates);
    if (spent_ > budget_) {
        throw BudgetExceeded("candidate budget of " + std::to_string(budget_) +
                             " products exceeded");
    }
}

void LayerSet::seed() {
    uint64_t count = seed_size();
    charge(count);
    std::vector<LayerEntry> layer;
    layer.reserve(count);
    // Odometer over per-qubit dihedral factors: digit k*m + l per qubit,
    // qubit 0 most significant.
    std::vector<uint32_t> digit(n_, 0);
    const uint32_t radix = 2 * m_;
    for (uint64_t v = 0; v < count; v++) {
        Circuit w{n_, m_, {}};
        for (uint32_t q = 0; q < n_; q++) {
            uint32_t l = digit[q] % m_;
            if (l != 0) {
                w.gates.push_back({GateKind::T, q, 0, l});
            }
        }
        for (uint32_t q = 0; q < n_; q++) {
            if (digit[q] / m_ != 0) {
                w.gates.push_back({GateKind::X, q, 0, 0});
            }
        }
        layer.push_back({evaluate(w), std::move(w)});
        for (uint32_t q = n_; q-- > 0;) {
            if (++digit[q] < radix) {
                break;
            }
            digit[q] = 0;
        }
    }
    std::sort(layer.begin(), layer.end(), [](const LayerEntry &a, const LayerEntry &b) {
        return canonical_key(a.element) < canonical_key(b.element);
    });
    for (uint32_t i = 0; i < layer.size(); i++) {
        index_.emplace(canonical_key(layer[i].element), Ref{0, i});
    }
    step_candidates_.push_back(count);
    layers_.push_back(std::move(layer));
    if (n_ < 2) {
        closed_ = true;  // no entangling pairs exist
    }
}

bool LayerSet::extend() {
    if (closed_) {
        return false;
    }
    const std::vector<LayerEntry> &prev = layers_.back();
    const uint32_t r = depth() + 1;
    std::vector<LayerEntry> layer;
    uint64_t produced = 0;

    auto offer = [&](GroupElement el, Circuit w) {
        produced++;
        charge(1);
        std::string key = canonical_key(el);
        if (index_.find(key) != index_.end()) {
            return;
        }
        index_.emplace(std::move(key), Ref{r, 0});  // index fixed after the sort
        layer.push_back({std::move(el), std::move(w)});
    };

    for (const LayerEntry &entry : prev) {
        if (mode_ == LayerMode::CX) {
            for (uint32_t i = 0; i < n_; i++) {
                for (uint32_t j = 0; j < n_; j++) {
                    if (j == i) {
                        continue;
                    }
                    GroupElement cxd =
                        compose(GroupElement::cx_at(i, j, n_, m_), entry.element);
                    for (uint32_t l = 0; l < mod_.cs_order; l++) {
                        GroupElement el =
                            l == 0 ? cxd : compose(GroupElement::t_at(j, l, n_, m_), cxd);
                        Circuit w = entry.witness;
                        w.gates.push_back({GateKind::CX, i, j, 0});
                        if (l != 0) {
                            w.gates.push_back({GateKind::T, j, 0, l});
                        }
                        offer(std::move(el), std::move(w));
                    }
                }
            }
        } else {
            for (uint32_t i = 0; i < n_; i++) {
                for (uint32_t j = i + 1; j < n_; j++) {
                    uint32_t exps[2] = {1 % mod_.cs_order, (mod_.cs_order - 1) % mod_.cs_order};
                    for (int t = 0; t < 2; t++) {
                        uint32_t e = exps[t];
                        if (e == 0 || (t == 1 && e == exps[0])) {
                            continue;
                        }
                        GroupElement el =
                            compose(GroupElement::cs_at(i, j, e, n_, m_), entry.element);
                        Circuit w = entry.witness;
                        w.gates.push_back({GateKind::CS, i, j, e});
                        offer(std::move(el), std::move(w));
                    }
                }
            }
        }
    }

    if (layer.empty()) {
        closed_ = true;
        return false;
    }
    std::sort(layer.begin(), layer.end(), [](const LayerEntry &a, const LayerEntry &b) {
        return canonical_key(a.element) < canonical_key(b.element);
    });
    for (uint32_t i = 0; i < layer.size(); i++) {
        index_[canonical_key(layer[i].element)].index = i;
    }
    step_candidates_.push_back(produced);
    layers_.push_back(std::move(layer));
    return true;
}

void LayerSet::extend_to(uint32_t rmax) {
    while (depth() < rmax && extend()) {
    }
}

std::vector<uint64_t> LayerSet::layer_sizes() const {
    std::vector<uint64_t> sizes;
    sizes.reserve(layers_.size());
    for (const auto &layer : layers_) {
        sizes.push_back(layer.size());
    }
    return sizes;
}

uint64_t LayerSet::total() const {
    uint64_t t = 0;
    for (const auto &layer : layers_) {
        t += layer.size();
    }
    return t;
}

std::optional<CostWitness> LayerSet::min_cost(const GroupElement &el) {
    if (el.n != n_ || el.mod.m != m_) {
        throw std::invalid_argument("element shape does not match this stratification");
    }
    std::string key = canonical_key(el);
    for (;;) {
        auto it = index_.find(key);
        if (it != index_.end()) {
            const LayerEntry &entry = layers_[it->second.layer][it->second.index];
            return CostWitness{it->second.layer, entry.witness};
        }
        if (!extend()) {
            return std::nullopt;
        }
    }
}

std::vector<LayerRow> LayerSet::bound_report() const {
    std::vector<LayerRow> rows;
    const uint64_t seed_bound = seed_size();
    const uint64_t branch = branch_factor();
    uint64_t cum_candidates = 0;
    uint64_t cum_bound = 0;
    for (uint32_t r = 0; r < layers_.size(); r++) {
        LayerRow row;
        row.r = r;
        row.size = layers_[r].size();
        row.growth_bound = sat_pow(branch, r);
        row.step_candidates = step_candidates_[r];
        row.step_bound = sat_mul(seed_bound, row.growth_bound);
        cum_candidates = sat_add(cum_candidates, row.step_candidates);
        cum_bound = sat_add(cum_bound, row.step_bound);
        row.cum_candidates = cum_candidates;
        row.cum_bound = cum_bound;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cnotdihedral
