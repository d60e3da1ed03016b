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

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hamcirc/register_state.hpp"

namespace hamcirc {

/// Minimum bits needed to hold a vertex number, k = ceil(log2(n)).
inline uint32_t bits_per_vertex(uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("need at least 2 vertices");
    }
    return std::bit_width(n - 1);
}

/// Register bit layout parameters: n vertex codes of k bits each.
struct Encoding {
    uint32_t n;
    uint32_t k;

    static Encoding for_vertices(uint32_t n) { return {n, bits_per_vertex(n)}; }

    bool operator==(const Encoding &other) const = default;
};

/// One candidate walk: a permutation of {0..n-1} with position 0 fixed to
/// vertex 0, plus its lexicographic rank among all such permutations.
struct Initialization {
    std::vector<uint32_t> perm;
    uint64_t rank = 0;
};

/// Writes perm[p] as k little-endian bits at workspace lines
/// [p*k, (p+1)*k); every other line stays 0.
RegisterState encode_initialization(const Initialization &init, const Encoding &enc,
                                    uint32_t total_lines);

/// Writes a raw nk-bit code (bit j of `code` goes to line j). Used by
/// full-code-space runs; the code need not be a permutation.
RegisterState encode_raw_code(uint64_t code, const Encoding &enc, uint32_t total_lines);

/// Reads back the n k-bit codes. Codes >= n are returned as-is; they only
/// arise in full-code-space runs.
std::vector<uint32_t> decode_workspace(const RegisterState &state, const Encoding &enc);

/// Packs a vertex sequence into the raw nk-bit workspace code.
uint64_t pack_code(const std::vector<uint32_t> &seq, const Encoding &enc);

} // namespace hamcirc
