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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcirc {

enum class Mode {
    ReversibleFull, // enables + hit latches, no resets
    CmosOneshot,    // enables + one reusable temp line, reset after use
    CmosReduced,    // no enables, no hits; valid only for structured inits
};

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string &s);

enum class GateKind : uint8_t { Not, Cnot, Toffoli, Mcn, Reset, CReset };

/// One gate over register lines. NOT/CNOT/Toffoli/MCN flip the target when
/// all controls are 1; Reset/CReset zero the target (irreversible).
struct Gate {
    GateKind kind;
    std::vector<uint32_t> controls;
    uint32_t target;

    static Gate x(uint32_t t) { return {GateKind::Not, {}, t}; }
    static Gate cx(uint32_t c, uint32_t t) { return {GateKind::Cnot, {c}, t}; }
    static Gate ccx(uint32_t c1, uint32_t c2, uint32_t t) { return {GateKind::Toffoli, {c1, c2}, t}; }
    static Gate mcn(std::vector<uint32_t> cs, uint32_t t) { return {GateKind::Mcn, std::move(cs), t}; }
    static Gate reset(uint32_t t) { return {GateKind::Reset, {}, t}; }
    static Gate creset(uint32_t c, uint32_t t) { return {GateKind::CReset, {c}, t}; }

    bool irreversible() const { return kind == GateKind::Reset || kind == GateKind::CReset; }
    bool operator==(const Gate &other) const = default;
};

struct Segment {
    std::string name;
    uint32_t start;
    uint32_t len;

    bool operator==(const Segment &other) const = default;
};

/// Named line ranges of one register, in fixed order: workspace,
/// pair_result, enable, scratch, hit, temp, flag. Absent segments
/// (enable/hit/temp, depending on mode) are simply omitted.
struct LineLayout {
    std::vector<Segment> segments;
    uint32_t total = 0;

    const Segment *find(const std::string &name) const;
    const Segment &require(const std::string &name) const;

    uint32_t workspace_line(uint32_t position, uint32_t bit, uint32_t k) const {
        return require("workspace").start + position * k + bit;
    }
    uint32_t pair_result_line(uint32_t p) const { return require("pair_result").start + p; }
    uint32_t enable_line(uint32_t vertex) const { return require("enable").start + vertex; }
    uint32_t scratch_line(uint32_t i) const { return require("scratch").start + i; }
    uint32_t scratch_len() const { return require("scratch").len; }
    uint32_t hit_line(uint32_t arc_index, uint32_t p, uint32_t n) const {
        return require("hit").start + arc_index * n + p;
    }
    uint32_t temp_line() const { return require("temp").start; }
    uint32_t flag_line() const { return require("flag").start; }

    bool operator==(const LineLayout &other) const = default;
};

struct Circuit {
    LineLayout layout;
    std::vector<Gate> gates;
    Mode mode = Mode::CmosReduced;
    uint64_t graph_fingerprint = 0; // not part of the netlist format

    bool operator==(const Circuit &other) const {
        return layout == other.layout && gates == other.gates && mode == other.mode;
    }
};

/// Reversal of a reversible-full circuit; every gate in that mode is its
/// own inverse. Throws std::invalid_argument for irreversible modes.
Circuit invert(const Circuit &c);

/// Netlist text format: `# mode <mode>`, `# lines <total>`,
/// `# segment <name> <start> <len>` per segment, then one gate per line
/// (`NOT t`, `CNOT c t`, `TOF c1 c2 t`, `MCN c1,...,cj t`, `RST t`,
/// `CRST c t`). LF endings, decimal indices.
std::string emit_netlist(const Circuit &c);

struct NetlistParseError : std::runtime_error {
    NetlistParseError(int line, const std::string &what);
    int line;
};

Circuit parse_netlist(std::istream &in);
Circuit parse_netlist(const std::string &text);

} // namespace hamcirc
