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

#include "cnotdihedral/circuit.hpp"

#include <charconv>

namespace cnotdihedral {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            i++;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

int64_t parse_int(std::string_view token, size_t line_no) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

uint32_t parse_qubit(std::string_view token, uint32_t n, size_t line_no) {
    int64_t q = parse_int(token, line_no);
    if (q < 0 || q >= n) {
        throw ParseError(line_no,
                         "qubit index " + std::to_string(q) + " out of range for qubits " +
                             std::to_string(n));
    }
    return static_cast<uint32_t>(q);
}

// Reduce an exponent into [0, range), warning when the input was outside it.
uint32_t reduce_exponent(int64_t value, uint32_t range, std::string_view gate, size_t line_no,
                         std::vector<ParseWarning> &warnings) {
    int64_t r = value % static_cast<int64_t>(range);
    if (r < 0) {
        r += range;
    }
    if (value < 0 || value >= range) {
        warnings.push_back({line_no, std::string(gate) + " exponent " + std::to_string(value) +
                                         " reduced to " + std::to_string(r) + " (range [0, " +
                                         std::to_string(range) + "))"});
    }
    return static_cast<uint32_t>(r);
}

void require_arity(const std::vector<std::string_view> &tokens, size_t want, size_t line_no) {
    if (tokens.size() != want) {
        throw ParseError(line_no, "'" + std::string(tokens[0]) + "' takes " +
                                      std::to_string(want - 1) + " argument(s), got " +
                                      std::to_string(tokens.size() - 1));
    }
}

}  // namespace

ParseResult parse_circuit(std::string_view text) {
    ParseResult result;
    Circuit &c = result.circuit;
    bool have_qubits = false;
    bool have_m = false;
    Modulus mod(2);

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        line_no++;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }

        std::string_view head = tokens[0];
        if (!have_qubits) {
            if (head != "qubits") {
                throw ParseError(line_no, "expected 'qubits <n>' header first");
            }
            require_arity(tokens, 2, line_no);
            int64_t n = parse_int(tokens[1], line_no);
            if (n < 1 || n > 16) {
                throw ParseError(line_no, "qubit count must be in [1, 16]");
            }
            c.n = static_cast<uint32_t>(n);
            have_qubits = true;
            continue;
        }
        if (!have_m) {
            if (head != "m") {
                throw ParseError(line_no, "expected 'm <int>' header after 'qubits'");
            }
            require_arity(tokens, 2, line_no);
            int64_t m = parse_int(tokens[1], line_no);
            if (m < 2 || m > (int64_t{1} << 30)) {
                throw ParseError(line_no, "m must be at least 2");
            }
            c.m = static_cast<uint32_t>(m);
            mod = Modulus(c.m);
            have_m = true;
            continue;
        }

        if (head == "x") {
            require_arity(tokens, 2, line_no);
            c.gates.push_back({GateKind::X, parse_qubit(tokens[1], c.n, line_no), 0, 0});
        } else if (head == "t") {
            require_arity(tokens, 3, line_no);
            uint32_t q = parse_qubit(tokens[1], c.n, line_no);
            uint32_t k = reduce_exponent(parse_int(tokens[2], line_no), c.m, "t", line_no,
                                         result.warnings);
            c.gates.push_back({GateKind::T, q, 0, k});
        } else if (head == "cx") {
            require_arity(tokens, 3, line_no);
            uint32_t ctrl = parse_qubit(tokens[1], c.n, line_no);
            uint32_t tgt = parse_qubit(tokens[2], c.n, line_no);
            if (ctrl == tgt) {
                throw ParseError(line_no, "cx control and target must differ");
            }
            c.gates.push_back({GateKind::CX, ctrl, tgt, 0});
        } else if (head == "cs") {
            require_arity(tokens, 4, line_no);
            uint32_t a = parse_qubit(tokens[1], c.n, line_no);
            uint32_t b = parse_qubit(tokens[2], c.n, line_no);
            if (a == b) {
                throw ParseError(line_no, "cs qubits must differ");
            }
            uint32_t e = reduce_exponent(parse_int(tokens[3], line_no), mod.cs_order, "cs",
                                         line_no, result.warnings);
            c.gates.push_back({GateKind::CS, a, b, e});
        } else {
            throw ParseError(line_no, "unknown gate '" + std::string(head) + "'");
        }
    }

    if (!have_qubits || !have_m) {
        throw ParseError(line_no, "missing 'qubits'/'m' header");
    }
    return result;
}

namespace {

std::string gate_text(const Gate &g) {
    switch (g.kind) {
        case GateKind::X:
            return "x " + std::to_string(g.a);
        case GateKind::T:
            return "t " + std::to_string(g.a) + " " + std::to_string(g.e);
        case GateKind::CX:
            return "cx " + std::to_string(g.a) + " " + std::to_string(g.b);
        case GateKind::CS:
            return "cs " + std::to_string(g.a) + " " + std::to_string(g.b) + " " +
                   std::to_string(g.e);
    }
    return {};
}

}  // namespace

std::string serialize_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.n) + "\nm " + std::to_string(c.m) + "\n";
    for (const Gate &g : c.gates) {
        out += gate_text(g);
        out += '\n';
    }
    return out;
}

std::string serialize_gates_inline(const Circuit &c) {
    std::string out;
    for (const Gate &g : c.gates) {
        if (!out.empty()) {
            out += "; ";
        }
        out += gate_text(g);
    }
    return out;
}

GroupElement generator(const Gate &g, uint32_t n, uint32_t m) {
    switch (g.kind) {
        case GateKind::X:
            return GroupElement::x_at(g.a, n, m);
        case GateKind::T:
            return GroupElement::t_at(g.a, g.e, n, m);
        case GateKind::CX:
            return GroupElement::cx_at(g.a, g.b, n, m);
        case GateKind::CS:
            return GroupElement::cs_at(g.a, g.b, g.e, n, m);
    }
    throw std::invalid_argument("unknown gate kind");
}

GroupElement evaluate(const Circuit &c) {
    GroupElement acc = GroupElement::identity(c.n, c.m);
    for (const Gate &g : c.gates) {
        acc = compose(generator(g, c.n, c.m), acc);
    }
    return acc;
}

Circuit concat(const Circuit &first, const Circuit &then) {
    if (first.n != then.n || first.m != then.m) {
        throw std::invalid_argument("cannot concatenate circuits with different headers");
    }
    Circuit out = first;
    out.gates.insert(out.gates.end(), then.gates.begin(), then.gates.end());
    return out;
}

GateCounts gate_counts(const Circuit &c) {
    GateCounts counts;
    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
                counts.x++;
                break;
            case GateKind::T:
                counts.t += g.e != 0;
                break;
            case GateKind::CX:
                counts.cx++;
                break;
            case GateKind::CS:
                counts.cs += g.e != 0;
                break;
        }
    }
    return counts;
}

Circuit expand_cs(const Circuit &c) {
    Modulus mod(c.m);
    Circuit out{c.n, c.m, {}};
    for (const Gate &g : c.gates) {
        if (g.kind != GateKind::CS) {
            out.gates.push_back(g);
            continue;
        }
        if (g.e == 0) {
            continue;
        }
        // CS^e phase 4e on |11> realized with two CX: temporal order below is
        // the matrix product T_a^e T_b^e . CX . T_b^{m-e} . CX.
        out.gates.push_back({GateKind::CX, g.a, g.b, 0});
        out.gates.push_back({GateKind::T, g.b, 0, (c.m - g.e) % c.m});
        out.gates.push_back({GateKind::CX, g.a, g.b, 0});
        out.gates.push_back({GateKind::T, g.a, 0, g.e});
        out.gates.push_back({GateKind::T, g.b, 0, g.e});
    }
    return out;
}

}  // namespace cnotdihedral
