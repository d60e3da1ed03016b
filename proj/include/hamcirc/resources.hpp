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
#include <string>
#include <vector>

#include "hamcirc/circuit.hpp"

namespace hamcirc {

/// One accounted difference between a measured line count and the
/// published formula. Reasons: extra-enable-control, flag-line,
/// scratch-pool.
struct DeltaEntry {
    std::string reason;
    int64_t amount;
};

/// Measured side for one compiled mode, with the line-count delta broken
/// into tagged components that sum to measured - formula.
struct ModeComparison {
    Mode mode;
    uint64_t bits_formula;
    uint64_t bits_measured;
    uint64_t ops_measured;
    std::vector<DeltaEntry> bit_deltas;
};

/// Formula-level register/line/gate accounting plus the quantum-side
/// estimates, with optional measured comparisons per compiled mode.
struct ResourceReport {
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t m = 0;
    uint64_t num_registers = 0;       // (n-1)!
    uint64_t bits_formula_full = 0;   // n(k+2m+3) - 1
    uint64_t bits_formula_oneshot = 0; // n(k+3) - 1
    uint64_t bits_formula_reduced = 0; // n(k+2) - 1
    uint64_t ops_formula_full = 0;    // n[m(8k+10)+1] - 1
    uint64_t ops_formula_reduced = 0; // 6mn + 8kmn + 2mn + n - 1
    uint64_t totbits = 0;             // k * n!
    uint64_t qubits_quantum = 0;      // kn + 2mn
    uint64_t qubits_workspace = 0;    // ceil(n * log2(n))
    uint64_t grover = 0;              // round(n^(n/2))
    std::vector<ModeComparison> comparisons;
};

/// Exact integer evaluation of every published formula.
ResourceReport evaluate_formulas(uint32_t n, uint32_t k, uint32_t m);

/// (layout.total, post-lowering gate count).
std::pair<uint64_t, uint64_t> measure(const Circuit &c);

/// Adds a measured-vs-formula comparison for c's mode, with tagged deltas.
void add_measurement(ResourceReport &report, const Circuit &c);

/// round(n^(n/2)), the Grover iteration count per readout. Throws
/// std::overflow_error past 64 bits.
uint64_t grover_steps(uint32_t n);

/// k * n!, checked. Throws std::overflow_error.
uint64_t totbits(uint32_t n);

/// CSV `n,k,num_registers,bits_reduced,totbits` for n in [lo, hi];
/// overflowing cells read `overflow`.
std::string totbits_table(uint32_t lo, uint32_t hi);

/// Human-readable formula-vs-measured report.
std::string format_report(const ResourceReport &report);

} // namespace hamcirc
