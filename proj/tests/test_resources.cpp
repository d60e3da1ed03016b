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

#include <sstream>

#include "fixtures.hpp"
#include "hamcirc/compiler.hpp"
#include "hamcirc/resources.hpp"

using namespace hamcirc;

TEST_CASE("formula evaluation, n=5 k=3 m=6") {
    auto r = evaluate_formulas(5, 3, 6);
    CHECK(r.num_registers == 24);
    CHECK(r.bits_formula_full == 89);
    CHECK(r.bits_formula_oneshot == 29);
    CHECK(r.bits_formula_reduced == 24);
    CHECK(r.ops_formula_full == 1024);
    CHECK(r.ops_formula_full == 6 * 6 * 5 + 8 * 3 * 6 * 5 + 4 * 6 * 5 + 5 - 1);
    CHECK(r.ops_formula_reduced == 6 * 6 * 5 + 8 * 3 * 6 * 5 + 2 * 6 * 5 + 5 - 1);
    CHECK(r.ops_formula_full - r.ops_formula_reduced == 2 * 6 * 5);
    CHECK(r.totbits == 360);
    CHECK(r.qubits_quantum == 3 * 5 + 2 * 6 * 5);
}

TEST_CASE("n=10 headline quantities") {
    auto r = evaluate_formulas(10, 4, 12);
    CHECK(r.num_registers == 362880);
    CHECK(r.qubits_workspace == 34);
    CHECK(r.grover == 100000);
    CHECK(r.totbits == 14515200);
}

TEST_CASE("formula orderings hold for every n up to 16 and m >= 1") {
    for (uint32_t n = 2; n <= 16; n++) {
        uint32_t k = bits_per_vertex(n);
        for (uint32_t m : {1u, 3u, n * (n - 1) / 2}) {
            auto r = evaluate_formulas(n, k, m);
            CHECK(r.bits_formula_reduced < r.bits_formula_oneshot);
            CHECK(r.bits_formula_oneshot < r.bits_formula_full);
            CHECK(r.ops_formula_full - r.ops_formula_reduced == 2ull * m * n);
        }
    }
}

TEST_CASE("grover_steps") {
    CHECK(grover_steps(2) == 2);
    CHECK(grover_steps(4) == 16);
    CHECK(grover_steps(10) == 100000);
    CHECK_THROWS_AS(grover_steps(30), std::overflow_error);
}

TEST_CASE("totbits_table rows") {
    std::string csv = totbits_table(2, 10);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,k,num_registers,bits_reduced,totbits");
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        rows.push_back(line);
    }
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "2,1,1,5,2");
    CHECK(rows[3] == "5,3,24,24,360");
    CHECK(rows[8] == "10,4,362880,59,14515200");
}

TEST_CASE("totbits_table marks overflow rows") {
    std::string csv = totbits_table(24, 24);
    CHECK(csv.find("overflow") != std::string::npos);
}

TEST_CASE("measure matches frozen layout sizes") {
    Graph g = hamcirc::testing::k4();
    Encoding enc = Encoding::for_vertices(4);
    auto [lines, gates] = measure(compile(g, Mode::CmosReduced, enc));
    CHECK(lines == 16);
    CHECK(gates > 0);

    Graph empty(4, {});
    auto [el, eg] = measure(compile(empty, Mode::CmosReduced, Encoding::for_vertices(4)));
    CHECK(eg == 2 * 4 - 3); // single final MCN, lowered
    CHECK(el == 16);
}

TEST_CASE("measured gate count tracks the OPS formula on complete graphs") {
    for (uint32_t n : {4u, 5u, 6u}) {
        Graph g = hamcirc::testing::complete(n);
        Encoding enc = Encoding::for_vertices(n);
        auto report = evaluate_formulas(n, enc.k, g.num_edges());
        add_measurement(report, compile(g, Mode::ReversibleFull, enc));
        const auto &cmp = report.comparisons.back();
        double ratio = static_cast<double>(cmp.ops_measured) /
                       static_cast<double>(report.ops_formula_full);
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 3.0);
    }
}

TEST_CASE("bit deltas are tagged and sum to measured minus formula") {
    Graph g = hamcirc::testing::pentagon_chord();
    Encoding enc = Encoding::for_vertices(5);
    auto report = evaluate_formulas(5, 3, 6);
    for (Mode mode : {Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced}) {
        add_measurement(report, compile(g, mode, enc));
    }
    for (const auto &cmp : report.comparisons) {
        int64_t sum = 0;
        for (const auto &delta : cmp.bit_deltas) {
            CHECK((delta.reason == "flag-line" || delta.reason == "scratch-pool" ||
                   delta.reason == "extra-enable-control"));
            sum += delta.amount;
        }
        CHECK(sum == static_cast<int64_t>(cmp.bits_measured) -
                         static_cast<int64_t>(cmp.bits_formula));
    }
    CHECK(report.comparisons[0].bits_measured == 92);
    CHECK(report.comparisons[0].bits_formula == 89);
    CHECK(report.comparisons[2].bits_measured == 26);
    CHECK(report.comparisons[2].bits_formula == 24);
}
