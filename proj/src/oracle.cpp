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

#include "hamcirc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamcirc {

namespace {

void backtrack(const Graph &g, VertexSeq &path, std::vector<bool> &visited, CycleSet &out) {
    uint32_t n = g.num_vertices();
    if (path.size() == n) {
        if (g.has_edge(path.back(), 0)) {
            out.cycles.insert(canonicalize(path));
        }
        return;
    }
    for (uint32_t v = 1; v < n; v++) {
        if (!visited[v] && g.has_edge(path.back(), v)) {
            visited[v] = true;
            path.push_back(v);
            backtrack(g, path, visited, out);
            path.pop_back();
            visited[v] = false;
        }
    }
}

VertexSeq rotated_to_zero(VertexSeq seq) {
    auto it = std::find(seq.begin(), seq.end(), 0u);
    std::rotate(seq.begin(), it, seq.end());
    return seq;
}

} // namespace

CycleSet find_cycles(const Graph &g) {
    CycleSet out;
    uint32_t n = g.num_vertices();
    VertexSeq path{0};
    std::vector<bool> visited(n, false);
    visited[0] = true;
    backtrack(g, path, visited, out);
    return out;
}

VertexSeq canonicalize(const VertexSeq &seq) {
    auto n = static_cast<uint32_t>(seq.size());
    std::vector<bool> seen(n, false);
    for (auto v : seq) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("sequence is not a permutation");
        }
        seen[v] = true;
    }
    VertexSeq best;
    VertexSeq candidate = seq;
    for (int dir = 0; dir < 2; dir++) {
        for (uint32_t r = 0; r < n; r++) {
            std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
            if (best.empty() || candidate < best) {
                best = candidate;
            }
        }
        std::reverse(candidate.begin(), candidate.end());
    }
    return best;
}

std::set<VertexSeq> expected_fixed_start(const CycleSet &cs) {
    std::set<VertexSeq> out;
    for (const auto &cycle : cs.cycles) {
        VertexSeq forward = rotated_to_zero(cycle);
        VertexSeq backward = cycle;
        std::reverse(backward.begin(), backward.end());
        out.insert(forward);
        out.insert(rotated_to_zero(backward));
    }
    return out;
}

std::set<VertexSeq> expected_full_codes(const CycleSet &cs) {
    std::set<VertexSeq> out;
    for (const auto &cycle : cs.cycles) {
        VertexSeq candidate = cycle;
        for (int dir = 0; dir < 2; dir++) {
            for (size_t r = 0; r < cycle.size(); r++) {
                std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
                out.insert(candidate);
            }
            std::reverse(candidate.begin(), candidate.end());
        }
    }
    return out;
}

} // namespace hamcirc
