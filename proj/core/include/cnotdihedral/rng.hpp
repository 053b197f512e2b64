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

#ifndef CNOTDIHEDRAL_RNG_HPP_
#define CNOTDIHEDRAL_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace cnotdihedral {

// Deterministic seeded generator.  mt19937_64 has a fully specified output
// sequence, so the same seed reproduces the same draws on every platform.
// Bounded draws use rejection instead of modulo to stay exactly uniform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound); bound must be nonzero.
    uint64_t below(uint64_t bound) {
        uint64_t x, r;
        do {
            x = engine_();
            r = x % bound;
        } while (x - r > std::numeric_limits<uint64_t>::max() - (bound - 1));
        return r;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace cnotdihedral

#endif  // CNOTDIHEDRAL_RNG_HPP_
