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

#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/rng.hpp"

namespace test_util {

inline cnotdihedral::Circuit random_circuit(cnotdihedral::Rng &rng, uint32_t n, uint32_t m,
                                            uint32_t length) {
    using namespace cnotdihedral;
    Modulus mod(m);
    Circuit c{n, m, {}};
    for (uint32_t i = 0; i < length; i++) {
        uint64_t kind = rng.below(n >= 2 ? 4 : 2);
        switch (kind) {
            case 0:
                c.gates.push_back({GateKind::X, static_cast<uint32_t>(rng.below(n)), 0, 0});
                break;
            case 1:
                c.gates.push_back({GateKind::T, static_cast<uint32_t>(rng.below(n)), 0,
                                   static_cast<uint32_t>(rng.below(m))});
                break;
            default: {
                uint32_t a = static_cast<uint32_t>(rng.below(n));
                uint32_t b = static_cast<uint32_t>(rng.below(n - 1));
                if (b >= a) {
                    b++;
                }
                if (kind == 2) {
                    c.gates.push_back({GateKind::CX, a, b, 0});
                } else {
                    c.gates.push_back({GateKind::CS, a, b,
                                       static_cast<uint32_t>(rng.below(mod.cs_order))});
                }
                break;
            }
        }
    }
    return c;
}

}  // namespace test_util
