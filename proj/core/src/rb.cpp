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

#include "cnotdihedral/rb.hpp"

#include "cnotdihedral/canonical.hpp"
#include "cnotdihedral/group_element.hpp"

namespace cnotdihedral {

Circuit make_rb_sequence(uint32_t m, uint32_t length, Rng &rng) {
    Circuit c{2, m, {}};
    GroupElement product = GroupElement::identity(2, m);
    for (uint32_t s = 0; s < length; s++) {
        CanonicalForm f = sample_uniform(m, rng);
        product = compose(form_to_element(f, m), product);
        c = concat(c, form_to_circuit(f, m));
    }
    c = concat(c, form_to_circuit(classify(inverse(product)), m));
    return c;
}

std::vector<Circuit> make_rb_sequences(const RbOptions &options) {
    Rng rng(options.seed);
    std::vector<Circuit> out;
    out.reserve(options.count);
    for (uint32_t i = 0; i < options.count; i++) {
        Circuit c = make_rb_sequence(options.m, options.length, rng);
        if (options.expand_cs) {
            c = expand_cs(c);
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace cnotdihedral
