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

#include "cnotdihedral/canonical.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

#include "cnotdihedral/layers.hpp"

namespace cnotdihedral {

namespace {

// Static data per (class, direction): the affine rows the decomposition
// produces, and for the CX-carrying classes the three linear functions whose
// coefficients are 2l, 2l' and 2e.  Masks are over basis-index bits, so
// qubit 0 is bit value 2 and qubit 1 is bit value 1.
struct ClassShape {
    FormClass cls;
    uint8_t dir;
    uint32_t row0, row1;
    uint32_t lu, lv, lw;
};

constexpr ClassShape kShapes[] = {
    {FormClass::CSDihedral, 0, 2, 1, 0, 0, 0},
    {FormClass::CXLike, 0, 2, 3, 2, 3, 1},
    {FormClass::CXLike, 1, 3, 1, 3, 1, 2},
    {FormClass::DoubleCX, 0, 3, 2, 3, 2, 1},
    {FormClass::DoubleCX, 1, 1, 3, 1, 3, 2},
    {FormClass::TripleCX, 0, 1, 2, 1, 2, 3},
};

const ClassShape &shape_of(FormClass cls, uint8_t dir) {
    for (const ClassShape &s : kShapes) {
        if (s.cls == cls && s.dir == dir) {
            return s;
        }
    }
    throw std::invalid_argument("no such form class/direction");
}

const ClassShape *shape_by_rows(uint32_t row0, uint32_t row1) {
    for (const ClassShape &s : kShapes) {
        if (s.row0 == row0 && s.row1 == row1) {
            return &s;
        }
    }
    return nullptr;
}

uint32_t parity(uint32_t v) {
    return static_cast<uint32_t>(std::popcount(v)) & 1u;
}

bool has_direction_bit(FormClass cls) {
    return cls == FormClass::CXLike || cls == FormClass::DoubleCX;
}

void check_form(const CanonicalForm &form, const Modulus &mod) {
    if (form.dir > 1 || (form.dir == 1 && !has_direction_bit(form.cls))) {
        throw std::invalid_argument("form direction out of range");
    }
    if (form.k > 1 || form.kp > 1 || form.l >= mod.m || form.lp >= mod.m ||
        form.e >= mod.cs_order) {
        throw std::invalid_argument("form parameters out of range");
    }
}

// Block order in the index bijection.
constexpr struct {
    FormClass cls;
    uint8_t dir;
} kBlocks[] = {
    {FormClass::CSDihedral, 0}, {FormClass::CXLike, 0},  {FormClass::CXLike, 1},
    {FormClass::DoubleCX, 0},   {FormClass::DoubleCX, 1}, {FormClass::TripleCX, 0},
};

uint64_t block_size(const Modulus &mod) {
    unsigned __int128 b = 4;
    b *= mod.m;
    b *= mod.m;
    b *= mod.cs_order;
    if (b > UINT64_MAX) {
        throw std::overflow_error("form count does not fit in 64 bits");
    }
    return static_cast<uint64_t>(b);
}

}  // namespace

const char *form_class_name(FormClass cls) {
    switch (cls) {
        case FormClass::CSDihedral:
            return "cs-dihedral";
        case FormClass::CXLike:
            return "cx";
        case FormClass::DoubleCX:
            return "double-cx";
        case FormClass::TripleCX:
            return "triple-cx";
    }
    return "?";
}

uint64_t form_count(uint32_t m) {
    Modulus mod(m);
    unsigned __int128 total = static_cast<unsigned __int128>(block_size(mod)) * 6;
    if (total > UINT64_MAX) {
        throw std::overflow_error("form count does not fit in 64 bits");
    }
    return static_cast<uint64_t>(total);
}

uint64_t class_count(FormClass cls, uint32_t m) {
    Modulus mod(m);
    uint64_t b = block_size(mod);
    return has_direction_bit(cls) ? 2 * b : b;
}

uint64_t form_index(const CanonicalForm &form, uint32_t m) {
    Modulus mod(m);
    check_form(form, mod);
    uint64_t block = 0;
    while (kBlocks[block].cls != form.cls || kBlocks[block].dir != form.dir) {
        block++;
    }
    uint64_t inner =
        ((((uint64_t{form.k} * 2 + form.kp) * mod.m + form.l) * mod.m + form.lp)) *
            mod.cs_order +
        form.e;
    return block * block_size(mod) + inner;
}

CanonicalForm form_from_index(uint32_t m, uint64_t index) {
    Modulus mod(m);
    uint64_t b = block_size(mod);
    if (index >= 6 * b) {
        throw std::invalid_argument("form index out of range");
    }
    CanonicalForm f;
    f.cls = kBlocks[index / b].cls;
    f.dir = kBlocks[index / b].dir;
    uint64_t rem = index % b;
    f.e = static_cast<uint32_t>(rem % mod.cs_order);
    rem /= mod.cs_order;
    f.lp = static_cast<uint32_t>(rem % mod.m);
    rem /= mod.m;
    f.l = static_cast<uint32_t>(rem % mod.m);
    rem /= mod.m;
    f.kp = static_cast<uint32_t>(rem % 2);
    f.k = static_cast<uint32_t>(rem / 2);
    return f;
}

std::vector<CanonicalForm> enumerate_forms(uint32_t m) {
    std::vector<CanonicalForm> forms;
    forms.reserve(form_count(m));
    for_each_form(m, [&](const CanonicalForm &f) { forms.push_back(f); });
    return forms;
}

void for_each_form(uint32_t m, const std::function<void(const CanonicalForm &)> &fn) {
    uint64_t count = form_count(m);
    for (uint64_t i = 0; i < count; i++) {
        fn(form_from_index(m, i));
    }
}

Circuit form_to_circuit(const CanonicalForm &form, uint32_t m) {
    Modulus mod(m);
    check_form(form, mod);
    Circuit c{2, m, {}};
    uint32_t i = form.dir ? 1 : 0;
    uint32_t j = form.dir ? 0 : 1;
    switch (form.cls) {
        case FormClass::CSDihedral:
            break;
        case FormClass::CXLike:
            if (form.e != 0) {
                c.gates.push_back({GateKind::T, j, 0, form.e});
            }
            c.gates.push_back({GateKind::CX, i, j, 0});
            break;
        case FormClass::DoubleCX:
            if (form.e != 0) {
                c.gates.push_back({GateKind::T, j, 0, form.e});
            }
            c.gates.push_back({GateKind::CX, j, i, 0});
            c.gates.push_back({GateKind::CX, i, j, 0});
            break;
        case FormClass::TripleCX:
            c.gates.push_back({GateKind::CX, 0, 1, 0});
            if (form.e != 0) {
                c.gates.push_back({GateKind::T, 1, 0, form.e});
            }
            c.gates.push_back({GateKind::CX, 1, 0, 0});
            c.gates.push_back({GateKind::CX, 0, 1, 0});
            break;
    }
    if (form.l != 0) {
        c.gates.push_back({GateKind::T, 0, 0, form.l});
    }
    if (form.lp != 0) {
        c.gates.push_back({GateKind::T, 1, 0, form.lp});
    }
    if (form.k) {
        c.gates.push_back({GateKind::X, 0, 0, 0});
    }
    if (form.kp) {
        c.gates.push_back({GateKind::X, 1, 0, 0});
    }
    if (form.cls == FormClass::CSDihedral && form.e != 0) {
        c.gates.push_back({GateKind::CS, 0, 1, form.e});
    }
    return c;
}

GroupElement form_to_element(const CanonicalForm &form, uint32_t m) {
    Modulus mod(m);
    check_form(form, mod);
    const ClassShape &s = shape_of(form.cls, form.dir);
    std::vector<uint32_t> rows{s.row0, s.row1};
    uint32_t flip = form.k * 2 + form.kp;
    std::vector<int64_t> raw(4);
    for (uint32_t x = 0; x < 4; x++) {
        uint32_t x0 = (x >> 1) & 1;
        uint32_t x1 = x & 1;
        if (form.cls == FormClass::CSDihedral) {
            raw[x] = 2LL * form.l * x0 + 2LL * form.lp * x1 +
                     4LL * form.e *
                         (static_cast<int64_t>((x0 ^ form.k) & (x1 ^ form.kp)) -
                          static_cast<int64_t>(form.k & form.kp));
        } else {
            raw[x] = 2LL * form.l * parity(s.lu & x) + 2LL * form.lp * parity(s.lv & x) +
                     2LL * form.e * parity(s.lw & x);
        }
    }
    return element_from_raw(2, m, std::move(rows), flip, raw);
}

CanonicalForm classify(const GroupElement &el) {
    if (el.n != 2) {
        throw std::invalid_argument("classification is defined for two qubits");
    }
    const Modulus &mod = el.mod;
    const uint32_t m = mod.m;
    const ClassShape *s = shape_by_rows(el.rows[0], el.rows[1]);
    if (s == nullptr) {
        throw std::invalid_argument("affine part is not invertible");
    }
    CanonicalForm f;
    f.cls = s->cls;
    f.dir = s->dir;
    f.k = (el.flip >> 1) & 1;
    f.kp = el.flip & 1;
    const auto reject = [] { throw std::invalid_argument("phase table is not realizable"); };

    if (f.cls == FormClass::CSDihedral) {
        int64_t sigma = (f.k ^ f.kp) ? -1 : 1;  // (1-2k)(1-2k')
        uint32_t c = mod.reduce(sigma * (int64_t{el.phases[3]} - el.phases[2] - el.phases[1]));
        // Solve 4e = c (mod 2m) for the unique e in [0, m/d).
        if (m % 2 == 0) {
            if (c % 4 != 0) {
                reject();
            }
            f.e = (c / 4) % (m / 2);
        } else {
            if (c % 2 != 0) {
                reject();
            }
            f.e = static_cast<uint32_t>((uint64_t{c / 2} * ((m + 1) / 2)) % m);
        }
        uint32_t u = mod.reduce(int64_t{el.phases[2]} -
                                4LL * f.e * f.kp * (1 - 2 * static_cast<int64_t>(f.k)));
        uint32_t v = mod.reduce(int64_t{el.phases[1]} -
                                4LL * f.e * f.k * (1 - 2 * static_cast<int64_t>(f.kp)));
        if (u % 2 != 0 || v % 2 != 0) {
            reject();
        }
        f.l = u / 2;
        f.lp = v / 2;
    } else {
        // Each of the coefficients u = 2l, v = 2l', w = 2e shows up in exactly
        // two of the three nonzero phase entries; the index shared by a pair
        // of linear masks is where their coefficients add.
        auto common = [](uint32_t a, uint32_t b) {
            for (uint32_t i = 1; i < 4; i++) {
                if ((parity(a & i) & parity(b & i)) != 0) {
                    return i;
                }
            }
            return 0u;
        };
        uint32_t iuw = common(s->lu, s->lw);
        uint32_t ivw = common(s->lv, s->lw);
        uint32_t iuv = common(s->lu, s->lv);
        uint32_t rhs =
            mod.reduce(int64_t{el.phases[iuw]} + el.phases[ivw] - el.phases[iuv]);
        if (rhs % 2 != 0) {
            reject();
        }
        uint32_t w = rhs / 2;  // in [0, m); the other solution mod 2m is w + m
        if (m % 2 == 0) {
            if (w % 2 != 0) {
                reject();
            }
        } else if (w % 2 != 0) {
            w += m;  // the even lift
        }
        f.e = w / 2;
        uint32_t u = mod.reduce(int64_t{el.phases[iuw]} - w);
        uint32_t v = mod.reduce(int64_t{el.phases[ivw]} - w);
        if (u % 2 != 0 || v % 2 != 0) {
            reject();
        }
        f.l = u / 2;
        f.lp = v / 2;
    }
    if (form_to_element(f, m) != el) {
        reject();
    }
    return f;
}

CanonicalLookup::CanonicalLookup(uint32_t m) : m_(m) {
    if (m > 64) {
        throw std::invalid_argument("lookup tables support m up to 64");
    }
    uint64_t count = form_count(m);
    table_.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        table_.emplace(canonical_key(form_to_element(form_from_index(m, i), m)), i);
    }
}

bool CanonicalLookup::contains(const GroupElement &el) const {
    return table_.find(canonical_key(el)) != table_.end();
}

std::optional<CanonicalForm> CanonicalLookup::form_of(const GroupElement &el) const {
    auto it = table_.find(canonical_key(el));
    if (it == table_.end()) {
        return std::nullopt;
    }
    return form_from_index(m_, it->second);
}

ClassCostReport verify_class_costs(uint32_t m, uint64_t budget) {
    Modulus mod(m);
    ClassCostReport report;
    report.m = m;
    report.no_mixing = true;

    // Minimal CX count when X, T and CS powers are free: 0/1 breadth-first
    // search with zero-weight edges for the free generators.
    std::vector<GroupElement> free_gens;
    for (uint32_t q = 0; q < 2; q++) {
        free_gens.push_back(GroupElement::x_at(q, 2, m));
        if (m > 1) {
            free_gens.push_back(GroupElement::t_at(q, 1, 2, m));
        }
    }
    if (mod.cs_order > 1) {
        free_gens.push_back(GroupElement::cs_at(0, 1, 1, 2, m));
        if (mod.cs_order > 2) {
            free_gens.push_back(GroupElement::cs_at(0, 1, mod.cs_order - 1, 2, m));
        }
    }
    std::vector<GroupElement> cx_gens{GroupElement::cx_at(0, 1, 2, m),
                                      GroupElement::cx_at(1, 0, 2, m)};

    std::unordered_map<std::string, uint32_t> free_cost;
    std::deque<GroupElement> queue;
    GroupElement id = GroupElement::identity(2, m);
    free_cost.emplace(canonical_key(id), 0);
    queue.push_back(id);
    uint64_t spent = 0;
    auto charge = [&](uint64_t k) {
        spent += k;
        if (spent > budget) {
            throw BudgetExceeded("candidate budget of " + std::to_string(budget) +
                                 " products exceeded");
        }
    };
    while (!queue.empty()) {
        GroupElement u = std::move(queue.front());
        queue.pop_front();
        uint32_t d = free_cost.at(canonical_key(u));
        for (const GroupElement &g : free_gens) {
            charge(1);
            GroupElement v = compose(g, u);
            std::string key = canonical_key(v);
            auto it = free_cost.find(key);
            if (it == free_cost.end() || it->second > d) {
                free_cost[std::move(key)] = d;
                queue.push_front(std::move(v));
            }
        }
        for (const GroupElement &g : cx_gens) {
            charge(1);
            GroupElement v = compose(g, u);
            std::string key = canonical_key(v);
            auto it = free_cost.find(key);
            if (it == free_cost.end() || it->second > d + 1) {
                free_cost[std::move(key)] = d + 1;
                queue.push_back(std::move(v));
            }
        }
    }

    LayerSet pure(LayerMode::CX, 2, m, budget);
    pure.extend_to(UINT32_MAX);

    report.stats.resize(4);
    for (int i = 0; i < 4; i++) {
        report.stats[i].cls = static_cast<FormClass>(i);
        report.stats[i].free_min = UINT32_MAX;
        report.stats[i].pure_min = UINT32_MAX;
    }
    for_each_form(m, [&](const CanonicalForm &form) {
        GroupElement el = form_to_element(form, m);
        uint32_t fc = free_cost.at(canonical_key(el));
        std::optional<CostWitness> pc = pure.min_cost(el);
        if (!pc) {
            throw std::logic_error("element missing from closed stratification");
        }
        ClassCostStats &st = report.stats[static_cast<int>(form.cls)];
        st.count++;
        st.free_min = std::min(st.free_min, fc);
        st.free_max = std::max(st.free_max, fc);
        st.pure_min = std::min(st.pure_min, pc->cost);
        st.pure_max = std::max(st.pure_max, pc->cost);
        if (form.cls == FormClass::CSDihedral ? fc != 0 : fc != pc->cost) {
            report.no_mixing = false;
        }
    });
    for (ClassCostStats &st : report.stats) {
        if (st.count == 0) {
            st.free_min = st.pure_min = 0;
        }
    }
    return report;
}

CanonicalForm sample_uniform(uint32_t m, Rng &rng) {
    return form_from_index(m, rng.below(form_count(m)));
}

CanonicalForm sample_uniform(uint32_t m, uint64_t seed) {
    Rng rng(seed);
    return sample_uniform(m, rng);
}

}  // namespace cnotdihedral
