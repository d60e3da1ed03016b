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

#include "hamcirc/graph.hpp"

#include <algorithm>
#include <sstream>

namespace hamcirc {

Graph::Graph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) : n_(n) {
    if (n < 2) {
        throw std::invalid_argument("graph needs at least 2 vertices");
    }
    adj_.assign(static_cast<size_t>(n) * n, false);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop");
        }
        auto lo = std::min(u, v);
        auto hi = std::max(u, v);
        if (adj_[static_cast<size_t>(lo) * n + hi]) {
            throw std::invalid_argument("duplicate edge");
        }
        adj_[static_cast<size_t>(lo) * n + hi] = true;
        adj_[static_cast<size_t>(hi) * n + lo] = true;
        edges_.emplace_back(lo, hi);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    if (u >= n_ || v >= n_) {
        throw std::out_of_range("vertex index out of range");
    }
    return adj_[static_cast<size_t>(u) * n_ + v];
}

std::vector<DirectedArc> Graph::directed_arcs() const {
    std::vector<DirectedArc> arcs;
    arcs.reserve(2 * edges_.size());
    for (auto [u, v] : edges_) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return arcs;
}

uint64_t Graph::fingerprint() const {
    // FNV-1a over n and the sorted edge list.
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; i++) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(n_);
    for (auto [u, v] : edges_) {
        mix((static_cast<uint64_t>(u) << 32) | v);
    }
    return h;
}

GraphParseError::GraphParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

namespace {

// Significant lines only: strips CR, comments, blanks. Returns false at EOF.
bool next_line(std::istream &in, std::string &out, int &line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') {
            continue;
        }
        out = raw;
        return true;
    }
    return false;
}

} // namespace

Graph parse_graph(std::istream &in) {
    int line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) {
        throw GraphParseError(line_no, "missing header");
    }
    long n = 0, m = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n >> m) || (ls >> extra) || n < 2 || m < 0) {
            throw GraphParseError(line_no, "malformed header, expected `<n> <m>`");
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(static_cast<size_t>(m));
    std::vector<bool> seen(static_cast<size_t>(n) * n, false);
    for (long i = 0; i < m; i++) {
        if (!next_line(in, line, line_no)) {
            throw GraphParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                               std::to_string(i));
        }
        std::istringstream ls(line);
        long u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) {
            throw GraphParseError(line_no, "malformed edge, expected `<u> <v>`");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw GraphParseError(line_no, "vertex label out of range 1.." + std::to_string(n));
        }
        if (u == v) {
            throw GraphParseError(line_no, "self-loop");
        }
        auto a = static_cast<uint32_t>(std::min(u, v) - 1);
        auto b = static_cast<uint32_t>(std::max(u, v) - 1);
        if (seen[static_cast<size_t>(a) * n + b]) {
            throw GraphParseError(line_no, "duplicate edge");
        }
        seen[static_cast<size_t>(a) * n + b] = true;
        edges.emplace_back(a, b);
    }
    if (next_line(in, line, line_no)) {
        throw GraphParseError(line_no, "trailing data after last edge");
    }
    return Graph(static_cast<uint32_t>(n), std::move(edges));
}

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string render_graph(const Graph &g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) {
        out << (u + 1) << ' ' << (v + 1) << '\n';
    }
    return out.str();
}

std::string adjacency_table(const Graph &g) {
    std::ostringstream out;
    uint32_t n = g.num_vertices();
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = 0; j < n; j++) {
            if (j != 0) {
                out << '\t';
            }
            if (i != j && g.has_edge(i, j)) {
                out << (i + 1) << (j + 1);
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hamcirc
