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

#include <cassert>
#include <cstdint>
#include <vector>

namespace hamcirc {

/// Fixed-width bit vector: one candidate register of the machine, holding
/// workspace, pair results, enables, scratch, hits, and the flag line.
class RegisterState {
  public:
    explicit RegisterState(uint32_t width) : width_(width), words_((width + 63) / 64, 0) {}

    uint32_t width() const { return width_; }

    bool get(uint32_t i) const {
        assert(i < width_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(uint32_t i, bool v) {
        assert(i < width_);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(uint32_t i) {
        assert(i < width_);
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    bool operator==(const RegisterState &other) const = default;

  private:
    uint32_t width_;
    std::vector<uint64_t> words_;
};

} // namespace hamcirc
