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

#include <cstdint>

#include "hamcirc/encoding.hpp"

namespace hamcirc {

/// (n-1)!, the number of fixed-start candidate registers. Throws
/// std::overflow_error instead of wrapping.
uint64_t count_initializations(uint32_t n);

/// i-th fixed-start permutation, lexicographic on positions 1..n-1.
/// O(n^2) via the factorial number system; no enumeration.
Initialization unrank_initialization(uint64_t i, uint32_t n);

/// Inverse of unrank. Throws std::invalid_argument unless perm is a
/// permutation of {0..n-1} with perm[0] == 0.
uint64_t rank_initialization(const Initialization &init);

/// Streams ranks [lo, hi) in order with constant memory. Single consumer;
/// disjoint ranges may run on independent workers.
class InitializationStream {
  public:
    explicit InitializationStream(uint32_t n);
    InitializationStream(uint32_t n, uint64_t lo, uint64_t hi);

    /// Fills `out` with the next initialization; false when exhausted.
    bool next(Initialization &out);

  private:
    uint32_t n_;
    uint64_t next_rank_;
    uint64_t end_;
    std::vector<uint32_t> perm_;
};

} // namespace hamcirc
