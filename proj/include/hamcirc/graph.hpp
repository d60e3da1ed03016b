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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamcirc {

/// One direction of an undirected edge. Every edge {u,v} contributes an
/// ascending arc (min,max) and a descending arc (max,min).
struct DirectedArc {
    uint32_t src;
    uint32_t dst;

    bool ascending() const { return src < dst; }
    bool operator==(const DirectedArc &other) const = default;
};

/// Undirected simple graph. Vertices are 0-based internally; the file
/// format uses 1-based labels.
class Graph {
  public:
    /// Edges may arrive in any order and orientation; they are normalized
    /// to (min,max) and sorted. Throws std::invalid_argument on self-loops,
    /// duplicates, or out-of-range endpoints.
    Graph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t num_vertices() const { return n_; }
    uint32_t num_edges() const { return static_cast<uint32_t>(edges_.size()); }

    /// Symmetric edge query; throws std::out_of_range on bad indices.
    bool has_edge(uint32_t u, uint32_t v) const;

    /// Edges sorted lexicographically by (min,max).
    const std::vector<std::pair<uint32_t, uint32_t>> &edges() const { return edges_; }

    /// All 2m arcs: for each sorted edge, ascending arc then descending arc.
    std::vector<DirectedArc> directed_arcs() const;

    /// Stable hash of (n, sorted edge list).
    uint64_t fingerprint() const;

    bool operator==(const Graph &other) const = default;

  private:
    uint32_t n_;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;
    std::vector<bool> adj_;
};

/// Parse failure with the 1-based input line that caused it.
struct GraphParseError : std::runtime_error {
    GraphParseError(int line, const std::string &what);
    int line;
};

/// Graph file grammar: `<n> <m>` header, then m lines `<u> <v>` with
/// 1-based labels. Blank lines and `#` comments are allowed anywhere;
/// CRLF is accepted.
Graph parse_graph(std::istream &in);
Graph parse_graph(const std::string &text);

/// Inverse of parse_graph (canonical edge order, 1-based labels).
std::string render_graph(const Graph &g);

/// n x n tab-separated grid; cell (i,j) holds the label "ij" (1-based)
/// when the edge exists, empty otherwise. Diagonal cells are empty.
std::string adjacency_table(const Graph &g);

} // namespace hamcirc
