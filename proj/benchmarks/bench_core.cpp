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

#include <benchmark/benchmark.h>

#include "cnotdihedral/canonical.hpp"
#include "cnotdihedral/identities.hpp"
#include "cnotdihedral/layers.hpp"
#include "cnotdihedral/rb.hpp"
#include "cnotdihedral/rng.hpp"

using namespace cnotdihedral;

namespace {

GroupElement random_element(uint32_t m, uint64_t seed) {
    return form_to_element(sample_uniform(m, seed), m);
}

void BM_Compose(benchmark::State &state) {
    uint32_t m = static_cast<uint32_t>(state.range(0));
    GroupElement u = random_element(m, 1);
    GroupElement v = random_element(m, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(u, v));
    }
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(8);

void BM_CanonicalKey(benchmark::State &state) {
    GroupElement u = random_element(8, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_key(u));
    }
}
BENCHMARK(BM_CanonicalKey);

void BM_Classify(benchmark::State &state) {
    uint32_t m = static_cast<uint32_t>(state.range(0));
    std::vector<GroupElement> elements;
    for (uint64_t s = 0; s < 64; s++) {
        elements.push_back(random_element(m, s));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(elements[i++ & 63]));
    }
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(8);

void BM_EvaluateCircuit(benchmark::State &state) {
    Rng rng(7);
    RbOptions opts;
    opts.m = 8;
    opts.length = 10;
    opts.seed = 7;
    Circuit c = make_rb_sequences(opts)[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(c));
    }
}
BENCHMARK(BM_EvaluateCircuit);

void BM_PushSingleQubitLeft(benchmark::State &state) {
    RbOptions opts;
    opts.m = 8;
    opts.length = 20;
    opts.seed = 11;
    Circuit c = make_rb_sequences(opts)[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(push_single_qubit_left(c));
    }
}
BENCHMARK(BM_PushSingleQubitLeft);

void BM_LayerClosure(benchmark::State &state) {
    uint32_t m = static_cast<uint32_t>(state.range(0));
    for (auto _ : state) {
        LayerSet set(LayerMode::CX, 2, m);
        while (set.extend()) {
        }
        benchmark::DoNotOptimize(set.total());
    }
}
BENCHMARK(BM_LayerClosure)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RbSequence(benchmark::State &state) {
    Rng rng(13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_rb_sequence(8, 20, rng));
    }
}
BENCHMARK(BM_RbSequence)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
