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

#include "hamcirc/circuit.hpp"
#include "hamcirc/encoding.hpp"
#include "hamcirc/graph.hpp"

namespace hamcirc {

/// Line budget of one register for the given mode, segments in fixed
/// order: workspace (nk), pair_result (n), enable (n, modes with
/// enables), scratch, hit (2mn, reversible-full), temp (cmos-oneshot),
/// flag (1).
LineLayout layout_for(Mode mode, const Graph &g);

/// Toffoli-ladder expansion of a multi-controlled NOT. c controls use
/// c-2 scratch lines (zero on entry, restored to zero by the uncompute
/// half): 2c-3 Toffolis total. c=1 emits a CNOT, c=2 a single Toffoli.
std::vector<Gate> lower_mcn(const std::vector<uint32_t> &controls, uint32_t target,
                            const std::vector<uint32_t> &scratch);

struct CompileOptions {
    bool lower = true; // false keeps MCN gates in the output
};

/// Detector for one (pair, arc) combination: X-conditioning of the two
/// position codes, the mode's detection gates, then the inverse
/// conditioning. Pair p compares positions p and (p+1) mod n; the closing
/// pair p = n-1 never involves enables.
std::vector<Gate> build_edge_detector(uint32_t p, const DirectedArc &arc, uint32_t arc_index,
                                      Mode mode, const Encoding &enc, const LineLayout &layout,
                                      const CompileOptions &opts = {});

/// Full recognizer: enable arming (modes with enables), all n x 2m edge
/// detectors in deterministic order, then the all-pairs flag gate.
Circuit compile(const Graph &g, Mode mode, const Encoding &enc, const CompileOptions &opts = {});

} // namespace hamcirc
