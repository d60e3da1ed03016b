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

#include "hamcirc/compiler.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamcirc {

LineLayout layout_for(Mode mode, const Graph &g) {
    uint32_t n = g.num_vertices();
    uint32_t m = g.num_edges();
    uint32_t k = bits_per_vertex(n);
    // Detection ladders need c-2 scratch for c controls. With both endpoint
    // enables as controls the widest detector has 2k+2 controls; the final
    // flag gate has n controls. cmos-reduced detectors carry no enables.
    uint32_t scratch = mode == Mode::CmosReduced ? std::max(2 * k - 1, n - 2)
                                                 : std::max(2 * k, n - 2);
    LineLayout layout;
    uint32_t at = 0;
    auto add = [&](const std::string &name, uint32_t len) {
        layout.segments.push_back({name, at, len});
        at += len;
    };
    add("workspace", n * k);
    add("pair_result", n);
    if (mode != Mode::CmosReduced) {
        add("enable", n);
    }
    add("scratch", scratch);
    if (mode == Mode::ReversibleFull) {
        add("hit", 2 * m * n);
    }
    if (mode == Mode::CmosOneshot) {
        add("temp", 1);
    }
    add("flag", 1);
    layout.total = at;
    return layout;
}

std::vector<Gate> lower_mcn(const std::vector<uint32_t> &controls, uint32_t target,
                            const std::vector<uint32_t> &scratch) {
    auto c = controls.size();
    if (c == 0) {
        throw std::invalid_argument("MCN needs at least one control");
    }
    if (c == 1) {
        return {Gate::cx(controls[0], target)};
    }
    if (c == 2) {
        return {Gate::ccx(controls[0], controls[1], target)};
    }
    if (scratch.size() + 2 < c) {
        throw std::invalid_argument("insufficient scratch for " + std::to_string(c) +
                                    "-controlled NOT");
    }
    std::vector<Gate> gates;
    gates.reserve(2 * c - 3);
    // Compute half: chain partial ANDs through scratch, last gate hits the
    // target. Uncompute half restores every scratch line to zero.
    gates.push_back(Gate::ccx(controls[0], controls[1], scratch[0]));
    for (size_t i = 2; i + 1 < c; i++) {
        gates.push_back(Gate::ccx(scratch[i - 2], controls[i], scratch[i - 1]));
    }
    gates.push_back(Gate::ccx(scratch[c - 3], controls[c - 1], target));
    for (size_t i = c - 2; i-- > 0;) {
        gates.push_back(gates[i]);
    }
    return gates;
}

namespace {

std::vector<uint32_t> scratch_pool(const LineLayout &layout) {
    std::vector<uint32_t> pool(layout.scratch_len());
    for (uint32_t i = 0; i < pool.size(); i++) {
        pool[i] = layout.scratch_line(i);
    }
    return pool;
}

void emit_mcn(std::vector<Gate> &out, std::vector<uint32_t> controls, uint32_t target,
              const LineLayout &layout, const CompileOptions &opts) {
    if (!opts.lower || controls.size() <= 2) {
        if (controls.size() == 1) {
            out.push_back(Gate::cx(controls[0], target));
        } else if (controls.size() == 2) {
            out.push_back(Gate::ccx(controls[0], controls[1], target));
        } else {
            out.push_back(Gate::mcn(std::move(controls), target));
        }
        return;
    }
    auto lowered = lower_mcn(controls, target, scratch_pool(layout));
    out.insert(out.end(), lowered.begin(), lowered.end());
}

} // namespace

std::vector<Gate> build_edge_detector(uint32_t p, const DirectedArc &arc, uint32_t arc_index,
                                      Mode mode, const Encoding &enc, const LineLayout &layout,
                                      const CompileOptions &opts) {
    uint32_t n = enc.n;
    uint32_t k = enc.k;
    uint32_t q = (p + 1) % n;
    bool closing = p == n - 1;

    // X-conditioning: flip the zero bits of both position codes so a match
    // reads as all-ones on the 2k code lines.
    std::vector<Gate> conditioning;
    for (uint32_t b = 0; b < k; b++) {
        if (((arc.src >> b) & 1) == 0) {
            conditioning.push_back(Gate::x(layout.workspace_line(p, b, k)));
        }
    }
    for (uint32_t b = 0; b < k; b++) {
        if (((arc.dst >> b) & 1) == 0) {
            conditioning.push_back(Gate::x(layout.workspace_line(q, b, k)));
        }
    }

    std::vector<uint32_t> code_controls;
    code_controls.reserve(2 * k + 2);
    for (uint32_t b = 0; b < k; b++) {
        code_controls.push_back(layout.workspace_line(p, b, k));
    }
    for (uint32_t b = 0; b < k; b++) {
        code_controls.push_back(layout.workspace_line(q, b, k));
    }

    std::vector<Gate> gates = conditioning;
    if (closing || mode == Mode::CmosReduced) {
        // The closing pair must only return to the walk's first vertex; no
        // enables are involved. cmos-reduced drops enables everywhere.
        emit_mcn(gates, code_controls, layout.pair_result_line(p), layout, opts);
    } else {
        auto controls = code_controls;
        controls.push_back(layout.enable_line(arc.src));
        controls.push_back(layout.enable_line(arc.dst));
        if (mode == Mode::ReversibleFull) {
            uint32_t hit = layout.hit_line(arc_index, p, n);
            emit_mcn(gates, std::move(controls), hit, layout, opts);
            gates.push_back(Gate::cx(hit, layout.pair_result_line(p)));
            gates.push_back(Gate::cx(hit, layout.enable_line(arc.src)));
        } else {
            uint32_t temp = layout.temp_line();
            emit_mcn(gates, std::move(controls), temp, layout, opts);
            gates.push_back(Gate::cx(temp, layout.pair_result_line(p)));
            gates.push_back(Gate::cx(temp, layout.enable_line(arc.src)));
            gates.push_back(Gate::reset(temp));
        }
    }
    gates.insert(gates.end(), conditioning.begin(), conditioning.end());
    return gates;
}

Circuit compile(const Graph &g, Mode mode, const Encoding &enc, const CompileOptions &opts) {
    if (enc.n != g.num_vertices() || enc.k != bits_per_vertex(enc.n)) {
        throw std::invalid_argument("encoding does not match graph");
    }
    Circuit c;
    c.mode = mode;
    c.layout = layout_for(mode, g);
    c.graph_fingerprint = g.fingerprint();

    // Enable lines mean "not yet visited" and must start true; the circuit
    // arms them itself so every register starts as workspace bits only.
    if (const Segment *enables = c.layout.find("enable")) {
        for (uint32_t v = 0; v < enables->len; v++) {
            c.gates.push_back(Gate::x(enables->start + v));
        }
    }

    auto arcs = g.directed_arcs();
    auto num_arcs = static_cast<uint32_t>(arcs.size());
    for (uint32_t p = 0; p < g.num_vertices(); p++) {
        for (uint32_t a = 0; a < num_arcs; a++) {
            auto det = build_edge_detector(p, arcs[a], a, mode, enc, c.layout, opts);
            c.gates.insert(c.gates.end(), det.begin(), det.end());
        }
    }

    std::vector<uint32_t> pair_lines(g.num_vertices());
    for (uint32_t p = 0; p < g.num_vertices(); p++) {
        pair_lines[p] = c.layout.pair_result_line(p);
    }
    emit_mcn(c.gates, std::move(pair_lines), c.layout.flag_line(), c.layout, opts);
    return c;
}

} // namespace hamcirc
