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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnotdihedral/group_element.hpp"

namespace cnotdihedral {

enum class GateKind : uint8_t { X, T, CX, CS };

/// One gate. `a` is the qubit for X/T, the control for CX and the first qubit
/// for CS; `b` is the CX target or the second CS qubit. `e` is the exponent,
/// already reduced: [0, m) for T, [0, m/d) for CS; unused for X and CX.
struct Gate {
    GateKind kind;
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t e = 0;

    bool operator==(const Gate &) const = default;
};

/// Gate list in temporal order: gates[0] is applied first. As a matrix
/// product the circuit reads right to left.
struct Circuit {
    uint32_t n = 0;
    uint32_t m = 2;
    std::vector<Gate> gates;

    bool operator==(const Circuit &) const = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    size_t line() const {
        return line_;
    }

  private:
    size_t line_;
};

struct ParseWarning {
    size_t line;
    std::string message;
};

struct ParseResult {
    Circuit circuit;
    std::vector<ParseWarning> warnings;
};

/// Parse the line-oriented text format:
///
///   qubits <n>
///   m <int>
///   x <q> | t <q> <k> | cx <ctrl> <tgt> | cs <a> <b> <e>
///
/// '#' starts a comment; blank lines are ignored. The two header lines must
/// come first, in that order. Exponents outside the canonical range are
/// reduced and reported through the warning list rather than rejected.
/// Structural problems (unknown mnemonic, bad index, malformed header) throw
/// ParseError.
ParseResult parse_circuit(std::string_view text);

/// Exact inverse of parse_circuit for well-formed circuits: header then one
/// gate per line, LF endings.
std::string serialize_circuit(const Circuit &c);

/// Gates only, joined by "; " on a single line (empty string for an empty
/// circuit). Used for one-element-per-line listings.
std::string serialize_gates_inline(const Circuit &c);

/// The group element of a single gate acting on n qubits.
GroupElement generator(const Gate &g, uint32_t n, uint32_t m);

/// Fold the whole circuit into a group element. For circuits c1, c2 on the
/// same header, evaluate(c1 + c2) == compose(evaluate(c2), evaluate(c1)).
GroupElement evaluate(const Circuit &c);

/// Concatenation in temporal order; headers must match.
Circuit concat(const Circuit &first, const Circuit &then);

struct GateCounts {
    uint64_t x = 0;
    uint64_t t = 0;
    uint64_t cx = 0;
    uint64_t cs = 0;

    bool operator==(const GateCounts &) const = default;
};

/// Gate totals; T^0 and CS^0 are identities and count as zero.
GateCounts gate_counts(const Circuit &c);

/// Replace every CS^e gate by its two-CX realization
/// T_a^e T_b^e . CX_{a,b} . T_b^{-e} . CX_{a,b} (as a matrix product), leaving
/// the element unchanged. CS^0 is dropped.
Circuit expand_cs(const Circuit &c);

}  // namespace cnotdihedral
