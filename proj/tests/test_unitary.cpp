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

#include "cnotdihedral/unitary.hpp"
#include "test_util.hpp"

using namespace cnotdihedral;

TEST_CASE("single-gate unitaries have the textbook matrix action") {
    // X on qubit 0 of two: swaps the upper and lower halves of the index space.
    MonomialMatrix x0 = gate_unitary(Gate{GateKind::X, 0}, 2, 4);
    CHECK(x0.row_of == std::vector<uint32_t>({2, 3, 0, 1}));
    CHECK(x0.exp_of == std::vector<uint32_t>({0, 0, 0, 0}));

    // T^3 on qubit 1: phase on columns with qubit-1 bit set.
    MonomialMatrix t1 = gate_unitary(Gate{GateKind::T, 1, 0, 3}, 2, 4);
    CHECK(t1.row_of == std::vector<uint32_t>({0, 1, 2, 3}));
    CHECK(t1.exp_of == std::vector<uint32_t>({0, 6, 0, 6}));

    MonomialMatrix cx = gate_unitary(Gate{GateKind::CX, 0, 1}, 2, 4);
    CHECK(cx.row_of == std::vector<uint32_t>({0, 1, 3, 2}));

    MonomialMatrix cs = gate_unitary(Gate{GateKind::CS, 0, 1, 1}, 2, 4);
    CHECK(cs.row_of == std::vector<uint32_t>({0, 1, 2, 3}));
    CHECK(cs.exp_of == std::vector<uint32_t>({0, 0, 0, 4}));
}

TEST_CASE("multiply applies the right factor first") {
    uint32_t m = 4;
    MonomialMatrix first = gate_unitary(Gate{GateKind::X, 0}, 2, m);
    MonomialMatrix then = gate_unitary(Gate{GateKind::T, 0, 0, 1}, 2, m);
    MonomialMatrix product = multiply(then, first);
    // column 0 goes through X to row 2, then picks up T's phase on qubit 0
    CHECK(product.row_of[0] == 2);
    CHECK(product.exp_of[0] == 2);
    CHECK(product.row_of[2] == 0);
    CHECK(product.exp_of[2] == 0);

    CHECK_THROWS_AS(multiply(identity_unitary(2, 4), identity_unitary(3, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiply(identity_unitary(2, 4), identity_unitary(2, 8)),
                    std::invalid_argument);
}

TEST_CASE("evaluated circuits match gate-by-gate unitary products") {
    Rng rng(8080);
    for (uint32_t m : {2u, 3u, 8u}) {
        for (uint32_t n : {1u, 2u, 3u}) {
            for (int trial = 0; trial < 20; trial++) {
                Circuit c = test_util::random_circuit(rng, n, m, 16);
                MonomialMatrix oracle = identity_unitary(n, m);
                for (const Gate &g : c.gates) {
                    oracle = multiply(gate_unitary(g, n, m), oracle);
                }
                CHECK(equal_up_to_global_phase(to_unitary(evaluate(c)), oracle));
            }
        }
    }
}

TEST_CASE("to_unitary of a phase-normalized element is exact") {
    // evaluate() pins phases[0] = 0, so against a product of gate unitaries
    // whose (0,0) entry is 1 the match is exact, not just up to global phase.
    Rng rng(1111);
    Circuit c = test_util::random_circuit(rng, 2, 8, 12);
    GroupElement el = evaluate(c);
    MonomialMatrix u = to_unitary(el);
    CHECK(u.row_of[0] == el.apply(0));
    CHECK(u.exp_of[0] == 0);
}

TEST_CASE("global-phase comparison tolerates exactly one overall factor") {
    uint32_t m = 8;
    MonomialMatrix a = gate_unitary(Gate{GateKind::T, 0, 0, 3}, 2, m);
    MonomialMatrix shifted = a;
    for (uint32_t &e : shifted.exp_of) {
        e = (e + 5) % (2 * m);
    }
    CHECK(equal_up_to_global_phase(a, shifted));
    CHECK(equal_up_to_global_phase(shifted, a));

    MonomialMatrix skewed = a;
    skewed.exp_of[1] = (skewed.exp_of[1] + 1) % (2 * m);
    CHECK_FALSE(equal_up_to_global_phase(a, skewed));

    MonomialMatrix permuted = a;
    std::swap(permuted.row_of[0], permuted.row_of[1]);
    CHECK_FALSE(equal_up_to_global_phase(a, permuted));

    CHECK_FALSE(equal_up_to_global_phase(identity_unitary(2, 4), identity_unitary(3, 4)));
}

TEST_CASE("materialization is capped at ten qubits") {
    CHECK_THROWS_AS(to_unitary(GroupElement::identity(11, 2)), std::invalid_argument);
    CHECK_NOTHROW(identity_unitary(10, 2));
    CHECK_THROWS_AS(identity_unitary(11, 2), std::invalid_argument);
}
