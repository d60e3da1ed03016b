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

#include "hamcirc/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hamcirc {

uint64_t count_initializations(uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("need at least 2 vertices");
    }
    uint64_t f = 1;
    for (uint32_t i = 2; i < n; i++) {
        if (f > UINT64_MAX / i) {
            throw std::overflow_error("(n-1)! does not fit in 64 bits for n=" + std::to_string(n));
        }
        f *= i;
    }
    return f;
}

Initialization unrank_initialization(uint64_t i, uint32_t n) {
    uint64_t total = count_initializations(n);
    if (i >= total) {
        throw std::out_of_range("rank out of range");
    }
    Initialization init;
    init.rank = i;
    init.perm.reserve(n);
    init.perm.push_back(0);
    std::vector<uint32_t> remaining(n - 1);
    std::iota(remaining.begin(), remaining.end(), 1);
    // Factorial-base digits of i select suffix elements left to right.
    uint64_t f = total / (n - 1);
    for (uint32_t pos = 1; pos < n; pos++) {
        auto idx = static_cast<size_t>(i / f);
        i %= f;
        init.perm.push_back(remaining[idx]);
        remaining.erase(remaining.begin() + static_cast<long>(idx));
        if (pos + 1 < n) {
            f /= (n - 1 - pos);
        }
    }
    return init;
}

uint64_t rank_initialization(const Initialization &init) {
    auto n = static_cast<uint32_t>(init.perm.size());
    if (n < 2 || init.perm[0] != 0) {
        throw std::invalid_argument("not a fixed-start permutation");
    }
    std::vector<bool> seen(n, false);
    for (auto v : init.perm) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("not a fixed-start permutation");
        }
        seen[v] = true;
    }
    uint64_t rank = 0;
    uint64_t f = count_initializations(n) / (n - 1);
    std::vector<uint32_t> remaining(n - 1);
    std::iota(remaining.begin(), remaining.end(), 1);
    for (uint32_t pos = 1; pos < n; pos++) {
        auto it = std::find(remaining.begin(), remaining.end(), init.perm[pos]);
        rank += static_cast<uint64_t>(it - remaining.begin()) * f;
        remaining.erase(it);
        if (pos + 1 < n) {
            f /= (n - 1 - pos);
        }
    }
    return rank;
}

InitializationStream::InitializationStream(uint32_t n)
    : InitializationStream(n, 0, count_initializations(n)) {}

InitializationStream::InitializationStream(uint32_t n, uint64_t lo, uint64_t hi)
    : n_(n), next_rank_(lo), end_(hi) {
    uint64_t total = count_initializations(n);
    if (lo > hi || hi > total) {
        throw std::out_of_range("rank range out of bounds");
    }
    if (lo < hi) {
        perm_ = unrank_initialization(lo, n).perm;
    }
}

bool InitializationStream::next(Initialization &out) {
    if (next_rank_ >= end_) {
        return false;
    }
    out.perm = perm_;
    out.rank = next_rank_;
    next_rank_++;
    if (next_rank_ < end_) {
        std::next_permutation(perm_.begin() + 1, perm_.end());
    }
    return true;
}

} // namespace hamcirc
