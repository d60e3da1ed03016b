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
#include <vector>

#include "hamcirc/circuit.hpp"
#include "hamcirc/encoding.hpp"
#include "hamcirc/register_state.hpp"

namespace hamcirc {

/// In-place gate semantics. NOT/CNOT/Toffoli/MCN flip the target when all
/// controls read 1. Reset zeroes unconditionally; CReset zeroes the target
/// only when its control is 1.
void apply_gate(RegisterState &state, const Gate &gate);

/// Runs the whole gate sequence on a copy of `state`.
RegisterState run(const Circuit &c, const RegisterState &state);

/// One flagged register: the initialization rank (or raw code in
/// full-code-space runs) and the decoded vertex sequence.
struct FlagEntry {
    uint64_t id;
    std::vector<uint32_t> seq;

    bool operator==(const FlagEntry &other) const = default;
};

struct FlagReadout {
    std::vector<FlagEntry> entries; // ascending by id
    uint64_t total_tested = 0;
    bool any_flag = false;
};

/// The paper's integrated OR over all flag bits.
inline bool or_reduce(const FlagReadout &r) { return r.any_flag; }

/// One fresh register per initialization rank in [lo, hi); flagged ranks
/// are collected in order. `workers` > 1 splits the range across threads;
/// the merged result is identical to the serial run.
FlagReadout run_batch(const Circuit &c, const Encoding &enc, uint64_t lo, uint64_t hi,
                      unsigned workers = 1);

/// Whole fixed-start range with `workers` threads.
FlagReadout run_batch(const Circuit &c, const Encoding &enc, unsigned workers = 1);

/// Exhaustive sweep over all 2^(nk) workspace codes, the quantum-style
/// run. Requires reversible-full mode and nk <= 20; throws
/// std::invalid_argument otherwise.
FlagReadout run_full_code_space(const Circuit &c, const Encoding &enc);

} // namespace hamcirc
