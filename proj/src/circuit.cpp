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

#include "hamcirc/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamcirc {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::ReversibleFull:
            return "reversible-full";
        case Mode::CmosOneshot:
            return "cmos-oneshot";
        case Mode::CmosReduced:
            return "cmos-reduced";
    }
    return "?";
}

std::optional<Mode> mode_from_string(const std::string &s) {
    if (s == "reversible-full") {
        return Mode::ReversibleFull;
    }
    if (s == "cmos-oneshot") {
        return Mode::CmosOneshot;
    }
    if (s == "cmos-reduced") {
        return Mode::CmosReduced;
    }
    return std::nullopt;
}

const Segment *LineLayout::find(const std::string &name) const {
    for (const auto &seg : segments) {
        if (seg.name == name) {
            return &seg;
        }
    }
    return nullptr;
}

const Segment &LineLayout::require(const std::string &name) const {
    const Segment *seg = find(name);
    if (!seg) {
        throw std::logic_error("layout has no segment `" + name + "`");
    }
    return *seg;
}

Circuit invert(const Circuit &c) {
    if (c.mode != Mode::ReversibleFull) {
        throw std::invalid_argument("only reversible-full circuits can be inverted");
    }
    for (const auto &g : c.gates) {
        if (g.irreversible()) {
            throw std::invalid_argument("circuit contains irreversible gates");
        }
    }
    Circuit inv = c;
    std::reverse(inv.gates.begin(), inv.gates.end());
    return inv;
}

std::string emit_netlist(const Circuit &c) {
    std::ostringstream out;
    out << "# mode " << to_string(c.mode) << '\n';
    out << "# lines " << c.layout.total << '\n';
    for (const auto &seg : c.layout.segments) {
        out << "# segment " << seg.name << ' ' << seg.start << ' ' << seg.len << '\n';
    }
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case GateKind::Not:
                out << "NOT " << g.target << '\n';
                break;
            case GateKind::Cnot:
                out << "CNOT " << g.controls[0] << ' ' << g.target << '\n';
                break;
            case GateKind::Toffoli:
                out << "TOF " << g.controls[0] << ' ' << g.controls[1] << ' ' << g.target << '\n';
                break;
            case GateKind::Mcn: {
                out << "MCN ";
                for (size_t i = 0; i < g.controls.size(); i++) {
                    if (i) {
                        out << ',';
                    }
                    out << g.controls[i];
                }
                out << ' ' << g.target << '\n';
                break;
            }
            case GateKind::Reset:
                out << "RST " << g.target << '\n';
                break;
            case GateKind::CReset:
                out << "CRST " << g.controls[0] << ' ' << g.target << '\n';
                break;
        }
    }
    return out.str();
}

NetlistParseError::NetlistParseError(int line, const std::string &what)
    : std::runtime_error("netlist line " + std::to_string(line) + ": " + what), line(line) {}

Circuit parse_netlist(std::istream &in) {
    Circuit c;
    bool have_mode = false, have_lines = false;
    int line_no = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        if (raw.empty()) {
            continue;
        }
        std::istringstream ls(raw);
        std::string tok;
        ls >> tok;
        if (tok == "#") {
            std::string key;
            ls >> key;
            if (key == "mode") {
                std::string value;
                ls >> value;
                auto mode = mode_from_string(value);
                if (!mode) {
                    throw NetlistParseError(line_no, "unknown mode `" + value + "`");
                }
                c.mode = *mode;
                have_mode = true;
            } else if (key == "lines") {
                if (!(ls >> c.layout.total)) {
                    throw NetlistParseError(line_no, "bad line count");
                }
                have_lines = true;
            } else if (key == "segment") {
                Segment seg;
                if (!(ls >> seg.name >> seg.start >> seg.len)) {
                    throw NetlistParseError(line_no, "bad segment");
                }
                c.layout.segments.push_back(seg);
            } else {
                throw NetlistParseError(line_no, "unknown header `" + key + "`");
            }
            continue;
        }
        auto read_index = [&](uint32_t &out) {
            if (!(ls >> out)) {
                throw NetlistParseError(line_no, "bad operand");
            }
        };
        Gate g{GateKind::Not, {}, 0};
        if (tok == "NOT") {
            read_index(g.target);
        } else if (tok == "CNOT" || tok == "CRST") {
            g.kind = tok == "CNOT" ? GateKind::Cnot : GateKind::CReset;
            g.controls.resize(1);
            read_index(g.controls[0]);
            read_index(g.target);
        } else if (tok == "TOF") {
            g.kind = GateKind::Toffoli;
            g.controls.resize(2);
            read_index(g.controls[0]);
            read_index(g.controls[1]);
            read_index(g.target);
        } else if (tok == "MCN") {
            g.kind = GateKind::Mcn;
            std::string list;
            if (!(ls >> list)) {
                throw NetlistParseError(line_no, "bad control list");
            }
            std::istringstream cs(list);
            std::string item;
            while (std::getline(cs, item, ',')) {
                try {
                    g.controls.push_back(static_cast<uint32_t>(std::stoul(item)));
                } catch (const std::exception &) {
                    throw NetlistParseError(line_no, "bad control `" + item + "`");
                }
            }
            if (g.controls.empty()) {
                throw NetlistParseError(line_no, "MCN needs at least one control");
            }
            read_index(g.target);
        } else if (tok == "RST") {
            g.kind = GateKind::Reset;
            read_index(g.target);
        } else {
            throw NetlistParseError(line_no, "unknown gate `" + tok + "`");
        }
        std::string extra;
        if (ls >> extra) {
            throw NetlistParseError(line_no, "trailing data");
        }
        c.gates.push_back(std::move(g));
    }
    if (!have_mode || !have_lines) {
        throw NetlistParseError(line_no, "missing mode/lines header");
    }
    for (const auto &g : c.gates) {
        if (g.target >= c.layout.total) {
            throw NetlistParseError(0, "gate target out of range");
        }
        for (auto ctl : g.controls) {
            if (ctl >= c.layout.total) {
                throw NetlistParseError(0, "gate control out of range");
            }
        }
    }
    return c;
}

Circuit parse_netlist(const std::string &text) {
    std::istringstream in(text);
    return parse_netlist(in);
}

} // namespace hamcirc
