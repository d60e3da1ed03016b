// Copyright 2026 The hamcirc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamcirc/encoding.hpp"

namespace hamcirc {

RegisterState encode_initialization(const Initialization &init, const Encoding &enc,
                                    uint32_t total_lines) {
    if (total_lines < enc.n * enc.k) {
        throw std::invalid_argument("layout too small for workspace");
    }
    if (init.perm.size() != enc.n || init.perm[0] != 0) {
        throw std::invalid_argument("initialization does not match encoding");
    }
    RegisterState state(total_lines);
    for (uint32_t p = 0; p < enc.n; p++) {
        for (uint32_t b = 0; b < enc.k; b++) {
            if ((init.perm[p] >> b) & 1) {
                state.set(p * enc.k + b, true);
            }
        }
    }
    return state;
}

RegisterState encode_raw_code(uint64_t code, const Encoding &enc, uint32_t total_lines) {
    uint32_t nk = enc.n * enc.k;
    if (total_lines < nk) {
        throw std::invalid_argument("layout too small for workspace");
    }
    RegisterState state(total_lines);
    for (uint32_t j = 0; j < nk; j++) {
        if ((code >> j) & 1) {
            state.set(j, true);
        }
    }
    return state;
}

std::vector<uint32_t> decode_workspace(const RegisterState &state, const Encoding &enc) {
    std::vector<uint32_t> codes(enc.n, 0);
    for (uint32_t p = 0; p < enc.n; p++) {
        for (uint32_t b = 0; b < enc.k; b++) {
            if (state.get(p * enc.k + b)) {
                codes[p] |= uint32_t{1} << b;
            }
        }
    }
    return codes;
}

uint64_t pack_code(const std::vector<uint32_t> &seq, const Encoding &enc) {
    uint64_t code = 0;
    for (uint32_t p = 0; p < enc.n; p++) {
        code |= static_cast<uint64_t>(seq[p]) << (p * enc.k);
    }
    return code;
}

} // namespace hamcirc
