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

#include "cnotdihedral/circuit.hpp"

namespace cnotdihedral {

/// Exponent template for a rule gate, evaluated as c0 + c1*a + chalf*(m/2)
/// and reduced into the gate's canonical range. `a` is the rule's free
/// parameter (when it has one); chalf is only used by even-m rules.
struct ExpExpr {
    int32_t c0 = 0;
    int32_t c1 = 0;
    int32_t chalf = 0;
};

/// A gate inside a rule template. Slots name the rule's qubit variables:
/// slot 0 is i, slot 1 is j.
struct TemplateGate {
    GateKind kind;
    uint8_t slot_a = 0;
    uint8_t slot_b = 1;
    ExpExpr e;
};

/// One rewrite rule: two gate sequences (temporal order) that evaluate to the
/// same group element for every qubit assignment and every value of the free
/// parameter. Rules are plain data so that verification and documentation
/// read off the same source of truth.
struct IdentityRule {
    enum class Param : uint8_t { None, TPower, CSPower };

    std::string name;
    bool even_m_only = false;
    Param param = Param::None;
    uint8_t arity = 2;
    std::vector<TemplateGate> lhs;
    std::vector<TemplateGate> rhs;
};

/// The built-in rule catalog.
const std::vector<IdentityRule> &identity_catalog();

/// Instantiate a rule at concrete qubits and parameter value. `j` is ignored
/// for single-qubit rules.
std::pair<Circuit, Circuit> instantiate(const IdentityRule &rule, uint32_t i, uint32_t j,
                                        uint32_t a, uint32_t n, uint32_t m);

enum class RuleStatus : uint8_t { Pass, Fail, Skip };

struct RuleResult {
    std::string name;
    RuleStatus status;
    uint64_t instantiations = 0;
    std::string counterexample;  // "i=.. j=.. a=.." for the first failure
};

struct VerifyReport {
    uint32_t n = 0;
    uint32_t m = 0;
    std::vector<RuleResult> results;

    bool all_ok() const {
        for (const RuleResult &r : results) {
            if (r.status == RuleStatus::Fail) {
                return false;
            }
        }
        return true;
    }
};

/// Check every rule over every qubit assignment on n qubits and every value
/// of its free parameter at modulus m. Even-m-only rules are skipped (not
/// failed) when m is odd.
VerifyReport verify_all(uint32_t m, uint32_t n);

/// Peephole normalizer: moves single-qubit gates toward the start of the
/// circuit through the two-qubit gates they commute with (picking up the
/// known conjugation by-products), and fuses runs of single-qubit gates on
/// one qubit into at most one X followed by one T power. The element is
/// unchanged and so are the CX and CS counts. `rule_applications`, when
/// given, receives the number of rewrites performed.
Circuit push_single_qubit_left(const Circuit &c, uint64_t *rule_applications = nullptr);

}  // namespace cnotdihedral
