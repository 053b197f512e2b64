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

#include "cnotdihedral/identities.hpp"

#include <stdexcept>

namespace cnotdihedral {

namespace {

using Param = IdentityRule::Param;

ExpExpr one() {
    return {1, 0, 0};
}
ExpExpr neg_one() {
    return {-1, 0, 0};
}
ExpExpr fixed(int32_t c0) {
    return {c0, 0, 0};
}
ExpExpr param() {
    return {0, 1, 0};
}
ExpExpr half_m() {
    return {0, 0, 1};
}

TemplateGate gx(uint8_t s) {
    return {GateKind::X, s, 1, {}};
}
TemplateGate gt(uint8_t s, ExpExpr e) {
    return {GateKind::T, s, 1, e};
}
TemplateGate gcx(uint8_t sa, uint8_t sb) {
    return {GateKind::CX, sa, sb, {}};
}
TemplateGate gcs(uint8_t sa, uint8_t sb, ExpExpr e) {
    return {GateKind::CS, sa, sb, e};
}

std::vector<IdentityRule> build_catalog() {
    std::vector<IdentityRule> rules;
    auto add = [&](std::string name, uint8_t arity, Param p,
                   std::vector<TemplateGate> lhs, std::vector<TemplateGate> rhs,
                   bool even_only = false) {
        rules.push_back({std::move(name), even_only, p, arity, std::move(lhs), std::move(rhs)});
    };

    // Single-qubit dihedral relations.
    add("Eq4.Tdg", 1, Param::None, {gt(0, one()), gt(0, neg_one())}, {});
    add("Eq4.XTX", 1, Param::None, {gx(0), gt(0, one()), gx(0)}, {gt(0, neg_one())});
    add("Eq4.TXT", 1, Param::None, {gt(0, one()), gx(0), gt(0, one())}, {gx(0)});
    add("Eq4.TXTdg", 1, Param::None, {gt(0, neg_one()), gx(0), gt(0, one())},
        {gx(0), gt(0, fixed(2))});

    // CS as a two-CX macro, in both gate orderings.
    add("Eq5.CS.left", 2, Param::None, {gcs(0, 1, one())},
        {gcx(0, 1), gt(1, neg_one()), gcx(0, 1), gt(0, one()), gt(1, one())});
    add("Eq5.CS.right", 2, Param::None, {gcs(0, 1, one())},
        {gt(0, one()), gt(1, one()), gcx(0, 1), gt(1, neg_one()), gcx(0, 1)});

    // Absorbing a CX into the macro leaves a single CX.
    add("Eq6.CSCX.left", 2, Param::None, {gcx(0, 1), gcs(0, 1, one())},
        {gt(1, neg_one()), gcx(0, 1), gt(0, one()), gt(1, one())});
    add("Eq6.CSCX.right", 2, Param::None, {gcs(0, 1, one()), gcx(0, 1)},
        {gt(0, one()), gt(1, one()), gcx(0, 1), gt(1, neg_one())});

    // The adjoint macro.
    add("Eq7.CSdg.left", 2, Param::None, {gcs(0, 1, neg_one())},
        {gcx(0, 1), gt(1, one()), gcx(0, 1), gt(0, neg_one()), gt(1, neg_one())});
    add("Eq7.CSdg.right", 2, Param::None, {gcs(0, 1, neg_one())},
        {gt(0, neg_one()), gt(1, neg_one()), gcx(0, 1), gt(1, one()), gcx(0, 1)});

    // CS is symmetric in its qubits, and so are its powers.
    add("Eq8.CSsym", 2, Param::CSPower, {gcs(1, 0, param())}, {gcs(0, 1, param())});
    add("Eq8.CSdgsym", 2, Param::None, {gcs(1, 0, neg_one())}, {gcs(0, 1, neg_one())});

    // T powers commute with CS.
    add("Eq9.IT", 2, Param::TPower, {gcs(0, 1, one()), gt(1, param())},
        {gt(1, param()), gcs(0, 1, one())});
    add("Eq9.TI", 2, Param::TPower, {gcs(0, 1, one()), gt(0, param())},
        {gt(0, param()), gcs(0, 1, one())});
    add("Eq9.TT", 2, Param::TPower, {gcs(0, 1, one()), gt(0, param()), gt(1, param())},
        {gt(0, param()), gt(1, param()), gcs(0, 1, one())});

    // Conjugating CS by X inverts it up to an S on the untouched leg.
    add("Eq10.XI", 2, Param::None, {gx(0), gcs(0, 1, one()), gx(0)},
        {gt(1, fixed(2)), gcs(0, 1, neg_one())});
    add("Eq10.IX", 2, Param::None, {gx(1), gcs(0, 1, one()), gx(1)},
        {gt(0, fixed(2)), gcs(0, 1, neg_one())});
    add("Eq10.XX", 2, Param::None, {gx(0), gx(1), gcs(0, 1, one()), gx(0), gx(1)},
        {gt(0, fixed(-2)), gt(1, fixed(-2)), gcs(0, 1, one())});

    // CX commutations and conjugations.
    add("Eq11.TI", 2, Param::TPower, {gcx(0, 1), gt(0, param())},
        {gt(0, param()), gcx(0, 1)});
    add("Eq11.IX", 2, Param::None, {gcx(0, 1), gx(1)}, {gx(1), gcx(0, 1)});
    add("Eq11.XX", 2, Param::None, {gcx(0, 1), gx(0), gcx(0, 1)}, {gx(0), gx(1)});
    add("Eq11.Z", 2, Param::None, {gcx(0, 1), gt(1, half_m()), gcx(0, 1)},
        {gt(0, half_m()), gt(1, half_m())}, /*even_only=*/true);

    // A trailing T on the second qubit crosses a CX pair onto the first.
    add("Eq12.TCXCX", 2, Param::None, {gcx(1, 0), gcx(0, 1), gt(1, one())},
        {gt(0, one()), gcx(1, 0), gcx(0, 1)});

    return rules;
}

uint32_t reduce_expr(const ExpExpr &e, uint32_t a, uint32_t range, uint32_t m) {
    int64_t v = int64_t{e.c0} + int64_t{e.c1} * a + int64_t{e.chalf} * (m / 2);
    int64_t r = v % static_cast<int64_t>(range);
    if (r < 0) {
        r += range;
    }
    return static_cast<uint32_t>(r);
}

}  // namespace

const std::vector<IdentityRule> &identity_catalog() {
    static const std::vector<IdentityRule> catalog = build_catalog();
    return catalog;
}

std::pair<Circuit, Circuit> instantiate(const IdentityRule &rule, uint32_t i, uint32_t j,
                                        uint32_t a, uint32_t n, uint32_t m) {
    Modulus mod(m);
    if (i >= n || (rule.arity == 2 && (j >= n || i == j))) {
        throw std::invalid_argument("rule qubits out of range");
    }
    if (rule.even_m_only && m % 2 != 0) {
        throw std::invalid_argument("rule " + rule.name + " requires even m");
    }
    uint32_t slot_q[2] = {i, rule.arity == 2 ? j : i};
    auto build = [&](const std::vector<TemplateGate> &tpl) {
        Circuit c{n, m, {}};
        for (const TemplateGate &tg : tpl) {
            Gate g{tg.kind, slot_q[tg.slot_a], slot_q[tg.slot_b], 0};
            if (tg.kind == GateKind::T) {
                g.e = reduce_expr(tg.e, a, m, m);
            } else if (tg.kind == GateKind::CS) {
                g.e = reduce_expr(tg.e, a, mod.cs_order, m);
            }
            c.gates.push_back(g);
        }
        return c;
    };
    return {build(rule.lhs), build(rule.rhs)};
}

VerifyReport verify_all(uint32_t m, uint32_t n) {
    Modulus mod(m);
    if (n < 2) {
        throw std::invalid_argument("rule verification needs at least two qubits");
    }
    VerifyReport report{n, m, {}};
    for (const IdentityRule &rule : identity_catalog()) {
        RuleResult res{rule.name, RuleStatus::Pass, 0, ""};
        if (rule.even_m_only && m % 2 != 0) {
            res.status = RuleStatus::Skip;
            report.results.push_back(res);
            continue;
        }
        uint32_t param_range = 1;
        if (rule.param == IdentityRule::Param::TPower) {
            param_range = m;
        } else if (rule.param == IdentityRule::Param::CSPower) {
            param_range = mod.cs_order;
        }
        for (uint32_t i = 0; i < n && res.status == RuleStatus::Pass; i++) {
            for (uint32_t j = 0; j < n && res.status == RuleStatus::Pass; j++) {
                if (rule.arity == 2 ? i == j : j != 0) {
                    continue;
                }
                for (uint32_t a = 0; a < param_range; a++) {
                    auto [lhs, rhs] = instantiate(rule, i, j, a, n, m);
                    res.instantiations++;
                    if (evaluate(lhs) != evaluate(rhs)) {
                        res.status = RuleStatus::Fail;
                        res.counterexample = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                             " a=" + std::to_string(a);
                        break;
                    }
                }
            }
        }
        report.results.push_back(res);
    }
    return report;
}

namespace {

// Temporal run of single-qubit gates on one qubit, kept as X^k then T^l
// (equivalently the matrix product T^l X^k).
struct XtRun {
    uint32_t k = 0;
    uint32_t l = 0;
};

}  // namespace

// Works on a slot decomposition: per-qubit X/T runs between consecutive
// two-qubit gates.  Each pass moves runs one gate to the left where the
// commutation rules allow; only T powers stuck on a CX target survive in
// interior slots, so the pass count is bounded by the two-qubit gate count.
Circuit push_single_qubit_left(const Circuit &c, uint64_t *rule_applications) {
    Modulus mod(c.m);
    const uint32_t n = c.n;
    std::vector<Gate> two;
    std::vector<std::vector<XtRun>> slots;  // slots[t] sits before two[t]
    slots.emplace_back(n);

    auto append_x = [&](std::vector<XtRun> &s, uint32_t q) {
        // matrix X * (T^l X^k) = T^{-l} X^{k+1}
        s[q].l = (c.m - s[q].l) % c.m;
        s[q].k ^= 1;
    };
    auto append_t = [&](std::vector<XtRun> &s, uint32_t q, uint32_t a) {
        s[q].l = (s[q].l + a) % c.m;
    };

    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
                append_x(slots.back(), g.a);
                break;
            case GateKind::T:
                append_t(slots.back(), g.a, g.e);
                break;
            case GateKind::CS:
                if (g.e == 0) {
                    break;
                }
                [[fallthrough]];
            case GateKind::CX:
                two.push_back(g);
                slots.emplace_back(n);
                break;
        }
    }

    uint64_t apps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = 0; t < two.size(); t++) {
            Gate &g = two[t];
            std::vector<XtRun> &left = slots[t];
            std::vector<XtRun> &right = slots[t + 1];
            for (uint32_t q = 0; q < n; q++) {
                XtRun run = right[q];
                if (run.k == 0 && run.l == 0) {
                    continue;
                }
                if (g.kind == GateKind::CX && q == g.b) {
                    // X crosses the target; any T power stays behind it.
                    if (run.k) {
                        append_x(left, q);
                        right[q].k = 0;
                        apps++;
                        changed = true;
                    }
                    continue;
                }
                if (run.k) {
                    append_x(left, q);
                    if (g.kind == GateKind::CX && q == g.a) {
                        // X on the control crosses by duplicating onto the target.
                        append_x(left, g.b);
                    } else if (g.kind == GateKind::CS && (q == g.a || q == g.b)) {
                        // X crosses CS by inverting it, leaving S^e on the other leg.
                        uint32_t other = (q == g.a) ? g.b : g.a;
                        append_t(left, other, (2 * g.e) % c.m);
                        g.e = (mod.cs_order - g.e) % mod.cs_order;
                    }
                    apps++;
                }
                if (run.l) {
                    append_t(left, q, run.l);
                    apps++;
                }
                right[q] = {};
                changed = true;
            }
        }
    }

    Circuit out{c.n, c.m, {}};
    auto emit = [&](const std::vector<XtRun> &s) {
        for (uint32_t q = 0; q < n; q++) {
            if (s[q].k) {
                out.gates.push_back({GateKind::X, q, 0, 0});
            }
            if (s[q].l) {
                out.gates.push_back({GateKind::T, q, 0, s[q].l});
            }
        }
    };
    emit(slots[0]);
    for (size_t t = 0; t < two.size(); t++) {
        out.gates.push_back(two[t]);
        emit(slots[t + 1]);
    }
    if (rule_applications != nullptr) {
        *rule_applications = apps;
    }
    return out;
}

}  // namespace cnotdihedral
