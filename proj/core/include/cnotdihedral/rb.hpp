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

#ifndef CNOTDIHEDRAL_RB_HPP_
#define CNOTDIHEDRAL_RB_HPP_

#include <cstdint>
#include <vector>

#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/rng.hpp"

namespace cnotdihedral {

struct RbOptions {
    uint32_t m = 2;
    uint32_t length = 10;  // random steps before the closing inversion
    uint32_t count = 1;
    uint64_t seed = 0;
    bool expand_cs = false;  // lower CS powers to the two-CX macro
};

// One two-qubit benchmarking sequence: `length` elements drawn uniformly
// from the group (as their canonical circuits) followed by the canonical
// circuit of the inverse of their product.  The whole circuit evaluates to
// the identity, and the closing inversion costs at most three CX and one CS.
Circuit make_rb_sequence(uint32_t m, uint32_t length, Rng &rng);

// Batch driver; the same options reproduce the same circuits byte for byte.
std::vector<Circuit> make_rb_sequences(const RbOptions &options);

}  // namespace cnotdihedral

#endif  // CNOTDIHEDRAL_RB_HPP_
