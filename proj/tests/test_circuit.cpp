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

#include <doctest.h>

#include "cnotdihedral/circuit.hpp"
#include "test_util.hpp"

using namespace cnotdihedral;

TEST_CASE("serialize and parse round-trip") {
    Rng rng(2024);
    for (uint32_t m : {2u, 3u, 8u}) {
        for (int trial = 0; trial < 25; trial++) {
            Circuit c = test_util::random_circuit(rng, 3, m, 18);
            ParseResult back = parse_circuit(serialize_circuit(c));
            CHECK(back.circuit == c);
            CHECK(back.warnings.empty());
        }
    }
}

TEST_CASE("parser accepts comments, blank lines and CRLF") {
    ParseResult r = parse_circuit(
        "# leading comment\r\n"
        "qubits 2\r\n"
        "\r\n"
        "m 4  # trailing comment\r\n"
        "x 0\r\n"
        "t 1 3\r\n"
        "cx 0 1\r\n"
        "cs 0 1 1\r\n");
    CHECK(r.circuit.n == 2);
    CHECK(r.circuit.m == 4);
    REQUIRE(r.circuit.gates.size() == 4);
    CHECK(r.circuit.gates[0] == Gate{GateKind::X, 0});
    CHECK(r.circuit.gates[1] == Gate{GateKind::T, 1, 0, 3});
    CHECK(r.circuit.gates[2] == Gate{GateKind::CX, 0, 1});
    CHECK(r.circuit.gates[3] == Gate{GateKind::CS, 0, 1, 1});
    CHECK(r.warnings.empty());
}

TEST_CASE("header lines are mandatory and ordered") {
    CHECK_THROWS_AS(parse_circuit("m 2\nqubits 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nx 0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit(""), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 0\nm 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 1\n"), ParseError);

    try {
        parse_circuit("qubits 2\nm 4\nx 0\nfrob 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("structural gate errors carry line numbers") {
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 2\nx 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 2\ncx 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 2\ncs 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 2\nt 0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nm 2\nx 0 extra\n"), ParseError);
    try {
        parse_circuit("qubits 2\nm 2\nx 0\n\ncx 0 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 5);
    }
}

TEST_CASE("out-of-range exponents reduce with a warning") {
    ParseResult r = parse_circuit("qubits 2\nm 4\nt 0 9\nt 1 -1\ncs 0 1 5\n");
    REQUIRE(r.circuit.gates.size() == 3);
    CHECK(r.circuit.gates[0].e == 1);  // 9 mod 4
    CHECK(r.circuit.gates[1].e == 3);  // -1 mod 4
    CHECK(r.circuit.gates[2].e == 1);  // 5 mod cs_order=2
    REQUIRE(r.warnings.size() == 3);
    CHECK(r.warnings[0].line == 3);
    CHECK(r.warnings[1].line == 4);
    CHECK(r.warnings[2].line == 5);
}

TEST_CASE("evaluate matches gate-by-gate composition") {
    Rng rng(31337);
    for (uint32_t m : {2u, 3u, 8u}) {
        for (int trial = 0; trial < 20; trial++) {
            Circuit c = test_util::random_circuit(rng, 3, m, 16);
            GroupElement folded = GroupElement::identity(3, m);
            for (const Gate &g : c.gates) {
                folded = compose(generator(g, 3, m), folded);
            }
            CHECK(evaluate(c) == folded);
        }
    }
}

TEST_CASE("concatenation composes in temporal order") {
    Rng rng(404);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c1 = test_util::random_circuit(rng, 2, 8, 10);
        Circuit c2 = test_util::random_circuit(rng, 2, 8, 10);
        Circuit joined = concat(c1, c2);
        CHECK(joined.gates.size() == c1.gates.size() + c2.gates.size());
        CHECK(evaluate(joined) == compose(evaluate(c2), evaluate(c1)));
    }
    Circuit a = test_util::random_circuit(rng, 2, 4, 3);
    Circuit b = test_util::random_circuit(rng, 3, 4, 3);
    CHECK_THROWS_AS(concat(a, b), std::invalid_argument);
}

TEST_CASE("gate counts ignore zero-exponent phase gates") {
    ParseResult r = parse_circuit(
        "qubits 2\nm 4\n"
        "x 0\nx 1\n"
        "t 0 0\nt 1 2\n"
        "cx 0 1\n"
        "cs 0 1 0\ncs 0 1 1\n");
    GateCounts counts = gate_counts(r.circuit);
    CHECK(counts == GateCounts{2, 1, 1, 1});
}

TEST_CASE("expanding CS preserves the element and removes CS gates") {
    Rng rng(606);
    for (uint32_t m : {3u, 4u, 8u}) {
        for (int trial = 0; trial < 20; trial++) {
            Circuit c = test_util::random_circuit(rng, 3, m, 14);
            Circuit flat = expand_cs(c);
            CHECK(evaluate(flat) == evaluate(c));
            GateCounts before = gate_counts(c);
            GateCounts after = gate_counts(flat);
            CHECK(after.cs == 0);
            // each surviving CS becomes exactly two CX plus T gates
            CHECK(after.cx == before.cx + 2 * before.cs);
        }
    }
}

TEST_CASE("inline serialization joins gates with semicolons") {
    ParseResult r = parse_circuit("qubits 2\nm 8\nt 0 3\ncx 1 0\ncs 0 1 2\n");
    CHECK(serialize_gates_inline(r.circuit) == "t 0 3; cx 1 0; cs 0 1 2");
    Circuit empty{2, 8, {}};
    CHECK(serialize_gates_inline(empty).empty());
}
