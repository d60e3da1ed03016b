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

#include <algorithm>
#include <random>
#include <set>

#include "hamcirc/graph.hpp"

namespace hamcirc::testing {

inline Graph triangle() {
    return Graph(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k5() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < 5; u++) {
        for (uint32_t v = u + 1; v < 5; v++) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(5, std::move(edges));
}

inline Graph complete(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

/// 5-cycle 1-2-3-4-5-1 plus the chord 3-5. Exactly one Hamiltonian cycle.
inline Graph pentagon_chord() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 4}});
}

inline Graph random_graph(uint32_t n, double edge_prob, std::mt19937 &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            if (coin(rng) < edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Independent cycle finder used to cross-check the library oracle:
/// filters all fixed-start permutations rather than backtracking.
inline std::set<std::vector<uint32_t>> cycles_by_permutation_filter(const Graph &g) {
    uint32_t n = g.num_vertices();
    std::vector<uint32_t> perm(n);
    for (uint32_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    std::set<std::vector<uint32_t>> out;
    do {
        bool ok = true;
        for (uint32_t i = 0; ok && i < n; i++) {
            ok = g.has_edge(perm[i], perm[(i + 1) % n]);
        }
        if (ok) {
            // Canonical key: least over rotations and reflections.
            std::vector<uint32_t> best;
            auto cand = perm;
            for (int dir = 0; dir < 2; dir++) {
                for (uint32_t r = 0; r < n; r++) {
                    std::rotate(cand.begin(), cand.begin() + 1, cand.end());
                    if (best.empty() || cand < best) {
                        best = cand;
                    }
                }
                std::reverse(cand.begin(), cand.end());
            }
            out.insert(best);
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

} // namespace hamcirc::testing
