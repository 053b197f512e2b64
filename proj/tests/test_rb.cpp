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

#include "cnotdihedral/canonical.hpp"
#include "cnotdihedral/rb.hpp"

using namespace cnotdihedral;

TEST_CASE("benchmarking sequences close to the identity") {
    for (uint32_t m : {2u, 3u, 4u, 8u}) {
        for (uint32_t length : {1u, 5u, 20u}) {
            CAPTURE(m);
            CAPTURE(length);
            Rng rng(1000 + m + length);
            Circuit c = make_rb_sequence(m, length, rng);
            CHECK(c.n == 2);
            CHECK(c.m == m);
            CHECK(evaluate(c) == GroupElement::identity(2, m));
        }
    }
}

TEST_CASE("the same seed reproduces sequences byte for byte") {
    RbOptions opts;
    opts.m = 8;
    opts.length = 12;
    opts.count = 5;
    opts.seed = 777;
    std::vector<Circuit> a = make_rb_sequences(opts);
    std::vector<Circuit> b = make_rb_sequences(opts);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(serialize_circuit(a[i]) == serialize_circuit(b[i]));
    }

    RbOptions other = opts;
    other.seed = 778;
    std::vector<Circuit> c = make_rb_sequences(other);
    bool differs = false;
    for (size_t i = 0; i < a.size() && !differs; i++) {
        differs = !(a[i] == c[i]);
    }
    CHECK(differs);
}

TEST_CASE("sequences in a batch are driven by one evolving stream") {
    RbOptions opts;
    opts.m = 4;
    opts.length = 6;
    opts.count = 3;
    opts.seed = 12;
    std::vector<Circuit> batch = make_rb_sequences(opts);
    REQUIRE(batch.size() == 3);
    CHECK_FALSE(batch[0] == batch[1]);
    for (const Circuit &c : batch) {
        CHECK(evaluate(c) == GroupElement::identity(2, 4));
    }
}

TEST_CASE("expansion removes CS gates without breaking closure") {
    RbOptions opts;
    opts.m = 8;
    opts.length = 10;
    opts.count = 4;
    opts.seed = 99;
    opts.expand_cs = true;
    for (const Circuit &c : make_rb_sequences(opts)) {
        CHECK(gate_counts(c).cs == 0);
        CHECK(evaluate(c) == GroupElement::identity(2, 8));
    }

    // expansion only rewrites gates; it never changes the element
    RbOptions plain = opts;
    plain.expand_cs = false;
    std::vector<Circuit> kept = make_rb_sequences(plain);
    std::vector<Circuit> flat = make_rb_sequences(opts);
    REQUIRE(kept.size() == flat.size());
    for (size_t i = 0; i < kept.size(); i++) {
        CHECK(flat[i] == expand_cs(kept[i]));
    }
}

TEST_CASE("the closing inversion stays within the canonical gate budget") {
    // every canonical circuit uses at most three CX and one CS, so the
    // inversion appended to a sequence does too
    for_each_form(8, [&](const CanonicalForm &f) {
        GateCounts counts = gate_counts(form_to_circuit(f, 8));
        REQUIRE(counts.cx <= 3);
        REQUIRE(counts.cs <= 1);
    });
}
