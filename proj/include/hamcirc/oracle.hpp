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

#include <set>
#include <vector>

#include "hamcirc/graph.hpp"

namespace hamcirc {

using VertexSeq = std::vector<uint32_t>;

/// Undirected Hamiltonian cycles as canonical keys: the lexicographically
/// least representative over all rotations and both directions.
struct CycleSet {
    std::set<VertexSeq> cycles;
};

/// Exact enumeration by backtracking from vertex 0 with visited-set
/// pruning. Ground truth for every circuit-level result.
CycleSet find_cycles(const Graph &g);

/// Minimal rotation/reflection representative. Throws
/// std::invalid_argument unless seq is a permutation of {0..n-1}.
VertexSeq canonicalize(const VertexSeq &seq);

/// The fixed-start registers a batch run must flag: each cycle re-rooted
/// at vertex 0, walked in both directions. Size 2 * |cycles|.
std::set<VertexSeq> expected_fixed_start(const CycleSet &cs);

/// The codes a full-code-space run must flag: every rotation of every
/// cycle in both directions. Size 2n * |cycles|.
std::set<VertexSeq> expected_full_codes(const CycleSet &cs);

} // namespace hamcirc
