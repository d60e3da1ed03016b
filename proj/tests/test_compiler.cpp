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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hamcirc/compiler.hpp"
#include "hamcirc/enumerator.hpp"
#include "hamcirc/simulator.hpp"

using namespace hamcirc;
using hamcirc::testing::k4;
using hamcirc::testing::pentagon_chord;
using hamcirc::testing::triangle;

namespace {

std::vector<std::pair<std::string, uint32_t>> segment_lens(const LineLayout &layout) {
    std::vector<std::pair<std::string, uint32_t>> out;
    for (const auto &seg : layout.segments) {
        out.emplace_back(seg.name, seg.len);
    }
    return out;
}

RegisterState random_state(uint32_t width, std::mt19937 &rng) {
    RegisterState s(width);
    std::bernoulli_distribution coin(0.5);
    for (uint32_t i = 0; i < width; i++) {
        s.set(i, coin(rng));
    }
    return s;
}

} // namespace

TEST_CASE("layout_for reversible-full n=5 m=6") {
    auto layout = layout_for(Mode::ReversibleFull, pentagon_chord());
    std::vector<std::pair<std::string, uint32_t>> expected{
        {"workspace", 15}, {"pair_result", 5}, {"enable", 5},
        {"scratch", 6},    {"hit", 60},        {"flag", 1},
    };
    CHECK(segment_lens(layout) == expected);
    CHECK(layout.total == 92);
}

TEST_CASE("layout_for cmos-reduced") {
    auto layout5 = layout_for(Mode::CmosReduced, pentagon_chord());
    std::vector<std::pair<std::string, uint32_t>> expected5{
        {"workspace", 15}, {"pair_result", 5}, {"scratch", 5}, {"flag", 1}};
    CHECK(segment_lens(layout5) == expected5);
    CHECK(layout5.total == 26);

    auto layout4 = layout_for(Mode::CmosReduced, k4());
    std::vector<std::pair<std::string, uint32_t>> expected4{
        {"workspace", 8}, {"pair_result", 4}, {"scratch", 3}, {"flag", 1}};
    CHECK(segment_lens(layout4) == expected4);
    CHECK(layout4.total == 16);
}

TEST_CASE("layout segments are disjoint and cover the total") {
    for (Mode mode : {Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced}) {
        for (const Graph &g : {k4(), pentagon_chord(), triangle()}) {
            auto layout = layout_for(mode, g);
            uint32_t at = 0;
            for (const auto &seg : layout.segments) {
                CHECK(seg.start == at);
                at += seg.len;
            }
            CHECK(at == layout.total);
        }
    }
}

TEST_CASE("lower_mcn gate counts") {
    std::vector<uint32_t> scratch{20, 21, 22, 23, 24};
    CHECK(lower_mcn({0}, 9, {}) == std::vector<Gate>{Gate::cx(0, 9)});
    CHECK(lower_mcn({0, 1}, 9, {}) == std::vector<Gate>{Gate::ccx(0, 1, 9)});
    CHECK(lower_mcn({0, 1, 2, 3, 4, 5, 6}, 9, scratch).size() == 11);
    CHECK_THROWS_AS(lower_mcn({0, 1, 2, 3}, 9, {}), std::invalid_argument);
    CHECK_THROWS_AS(lower_mcn({}, 9, {}), std::invalid_argument);
}

TEST_CASE("lower_mcn is truth-table equivalent to an AND over 1..8 controls") {
    for (uint32_t c = 1; c <= 8; c++) {
        std::vector<uint32_t> controls(c);
        for (uint32_t i = 0; i < c; i++) {
            controls[i] = i;
        }
        uint32_t target = c;
        std::vector<uint32_t> scratch;
        for (uint32_t i = 0; i + 2 < c; i++) {
            scratch.push_back(c + 1 + i);
        }
        uint32_t width = c + 1 + static_cast<uint32_t>(scratch.size());
        auto gates = lower_mcn(controls, target, scratch);
        for (uint32_t input = 0; input < (uint32_t{1} << (c + 1)); input++) {
            RegisterState state(width);
            for (uint32_t i = 0; i <= c; i++) {
                state.set(i, (input >> i) & 1);
            }
            RegisterState out = state;
            for (const auto &g : gates) {
                apply_gate(out, g);
            }
            bool all = (input & ((uint32_t{1} << c) - 1)) == (uint32_t{1} << c) - 1;
            CHECK(out.get(target) == (state.get(target) ^ all));
            for (uint32_t i = 0; i < c; i++) {
                CHECK(out.get(i) == state.get(i));
            }
            for (auto s : scratch) {
                CHECK_FALSE(out.get(s));
            }
        }
    }
}

TEST_CASE("edge detector shape, reversible-full p=0 arc (0,1) on n=5") {
    Graph g = pentagon_chord();
    Encoding enc = Encoding::for_vertices(5);
    auto layout = layout_for(Mode::ReversibleFull, g);
    auto det = build_edge_detector(0, {0, 1}, 0, Mode::ReversibleFull, enc, layout,
                                   {.lower = false});
    // Codes 000 and 001 have five zero bits in total.
    REQUIRE(det.size() == 13);
    for (int i = 0; i < 5; i++) {
        CHECK(det[i].kind == GateKind::Not);
        CHECK(det[8 + i] == det[i]);
    }
    CHECK(det[5].kind == GateKind::Mcn);
    CHECK(det[5].controls.size() == 8);
    CHECK(det[5].target == layout.hit_line(0, 0, 5));
    CHECK(det[6] == Gate::cx(layout.hit_line(0, 0, 5), layout.pair_result_line(0)));
    CHECK(det[7] == Gate::cx(layout.hit_line(0, 0, 5), layout.enable_line(0)));
}

TEST_CASE("closing pair detector never involves enables") {
    Graph g = pentagon_chord();
    Encoding enc = Encoding::for_vertices(5);
    for (Mode mode : {Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced}) {
        auto layout = layout_for(mode, g);
        auto det = build_edge_detector(4, {4, 0}, 9, mode, enc, layout, {.lower = false});
        bool found_mcn = false;
        for (const auto &gate : det) {
            CHECK_FALSE(gate.irreversible());
            if (gate.kind == GateKind::Mcn) {
                found_mcn = true;
                CHECK(gate.controls.size() == 6);
                CHECK(gate.target == layout.pair_result_line(4));
            }
        }
        CHECK(found_mcn);
    }
}

TEST_CASE("X-conditioning count equals number of zero bits") {
    // n=4, arc (1,3): codes 01 and 11 have one zero bit in total.
    Encoding enc = Encoding::for_vertices(4);
    auto layout = layout_for(Mode::CmosReduced, k4());
    auto det = build_edge_detector(0, {1, 3}, 0, Mode::CmosReduced, enc, layout, {.lower = false});
    size_t nots = 0;
    for (const auto &gate : det) {
        nots += gate.kind == GateKind::Not;
    }
    CHECK(nots == 2); // one before the MCN, one after
}

TEST_CASE("compile triangle cmos-reduced flags exactly both orientations") {
    Graph g = triangle();
    Encoding enc = Encoding::for_vertices(3);
    Circuit c = compile(g, Mode::CmosReduced, enc, {.lower = false});
    // 3 pairs x 6 arcs, 1 detection gate each, plus the final flag gate.
    size_t detections = 0;
    for (const auto &gate : c.gates) {
        detections += gate.kind == GateKind::Mcn || gate.kind == GateKind::Toffoli;
    }
    CHECK(detections == 19);

    Circuit lowered = compile(g, Mode::CmosReduced, enc);
    for (auto perm : {std::vector<uint32_t>{0, 1, 2}, std::vector<uint32_t>{0, 2, 1}}) {
        auto state = run(lowered, encode_initialization({perm, 0}, enc, lowered.layout.total));
        CHECK(state.get(lowered.layout.flag_line()));
    }
}

TEST_CASE("compile K4 cmos-reduced flags 1-2-3-4-1") {
    Graph g = k4();
    Encoding enc = Encoding::for_vertices(4);
    Circuit c = compile(g, Mode::CmosReduced, enc);
    auto state = run(c, encode_initialization({{0, 1, 2, 3}, 0}, enc, c.layout.total));
    CHECK(state.get(c.layout.flag_line()));
}

TEST_CASE("empty graph compiles to the final flag gate only, flag stays 0") {
    Graph g(4, {});
    Encoding enc = Encoding::for_vertices(4);
    Circuit c = compile(g, Mode::CmosReduced, enc, {.lower = false});
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::Mcn);
    CHECK(c.gates[0].controls.size() == 4);

    Circuit lowered = compile(g, Mode::CmosReduced, enc);
    InitializationStream stream(4);
    Initialization init;
    while (stream.next(init)) {
        auto state = run(lowered, encode_initialization(init, enc, lowered.layout.total));
        CHECK_FALSE(state.get(lowered.layout.flag_line()));
    }
}

TEST_CASE("invert composes to the identity on random states") {
    Graph g = k4();
    Encoding enc = Encoding::for_vertices(4);
    Circuit c = compile(g, Mode::ReversibleFull, enc);
    Circuit inv = invert(c);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        auto state = random_state(c.layout.total, rng);
        CHECK(run(inv, run(c, state)) == state);
    }
}

TEST_CASE("invert of a single CNOT is itself") {
    Circuit c;
    c.mode = Mode::ReversibleFull;
    c.layout.segments = {{"workspace", 0, 2}};
    c.layout.total = 2;
    c.gates = {Gate::cx(0, 1)};
    CHECK(invert(c).gates == c.gates);
}

TEST_CASE("invert rejects irreversible circuits") {
    Circuit c;
    c.mode = Mode::CmosOneshot;
    c.layout.total = 2;
    c.gates = {Gate::reset(0)};
    CHECK_THROWS_AS(invert(c), std::invalid_argument);
    c.mode = Mode::ReversibleFull;
    CHECK_THROWS_AS(invert(c), std::invalid_argument);
}

TEST_CASE("scratch and temp lines are zero after every run") {
    for (Mode mode : {Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced}) {
        for (const Graph &g : {k4(), pentagon_chord(), triangle()}) {
            Encoding enc = Encoding::for_vertices(g.num_vertices());
            Circuit c = compile(g, mode, enc);
            InitializationStream stream(enc.n);
            Initialization init;
            while (stream.next(init)) {
                auto state = run(c, encode_initialization(init, enc, c.layout.total));
                const Segment &scratch = c.layout.require("scratch");
                for (uint32_t i = 0; i < scratch.len; i++) {
                    CHECK_FALSE(state.get(scratch.start + i));
                }
                if (const Segment *temp = c.layout.find("temp")) {
                    CHECK_FALSE(state.get(temp->start));
                }
            }
        }
    }
}

TEST_CASE("at most one arc detector toggles a pair result per code") {
    Graph g = pentagon_chord();
    Encoding enc = Encoding::for_vertices(5);
    auto layout = layout_for(Mode::CmosReduced, g);
    auto arcs = g.directed_arcs();
    std::mt19937 rng(11);
    std::uniform_int_distribution<uint64_t> code_dist(0, (uint64_t{1} << 15) - 1);
    for (int trial = 0; trial < 50; trial++) {
        uint64_t code = code_dist(rng);
        for (uint32_t p = 0; p < 5; p++) {
            int toggles = 0;
            for (uint32_t a = 0; a < arcs.size(); a++) {
                auto det = build_edge_detector(p, arcs[a], a, Mode::CmosReduced, enc, layout);
                auto state = encode_raw_code(code, enc, layout.total);
                auto before = state.get(layout.pair_result_line(p));
                for (const auto &gate : det) {
                    apply_gate(state, gate);
                }
                toggles += state.get(layout.pair_result_line(p)) != before;
            }
            CHECK(toggles <= 1);
        }
    }
}
