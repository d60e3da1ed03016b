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

#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "hamcirc/compiler.hpp"
#include "hamcirc/enumerator.hpp"
#include "hamcirc/oracle.hpp"
#include "hamcirc/resources.hpp"
#include "hamcirc/simulator.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

using namespace hamcirc;

Graph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphParseError(0, "cannot open " + path);
    }
    return parse_graph(in);
}

Mode parse_mode_or_die(const std::string &s) {
    auto mode = mode_from_string(s);
    if (!mode) {
        throw std::invalid_argument("unknown mode `" + s + "`");
    }
    return *mode;
}

std::string cycle_notation(const VertexSeq &seq) {
    std::string out;
    for (auto v : seq) {
        out += std::to_string(v + 1);
        out += '-';
    }
    out += std::to_string(seq[0] + 1);
    return out;
}

Graph random_graph(uint32_t n, double edge_prob, std::mt19937 &rng) {
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

int cmd_find(const std::string &path, const std::string &mode_str, bool full_codes,
             unsigned workers, uint64_t limit) {
    Graph g = load_graph(path);
    Encoding enc = Encoding::for_vertices(g.num_vertices());
    FlagReadout readout;
    if (full_codes) {
        if (enc.n * enc.k > 20) {
            std::cerr << "full code space needs nk <= 20 (nk = " << enc.n * enc.k << ")\n";
            return kExitGuard;
        }
        Circuit c = compile(g, Mode::ReversibleFull, enc);
        readout = run_full_code_space(c, enc);
    } else {
        Circuit c = compile(g, parse_mode_or_die(mode_str), enc);
        readout = run_batch(c, enc, workers);
    }
    std::set<VertexSeq> distinct;
    uint64_t printed = 0;
    for (const auto &entry : readout.entries) {
        distinct.insert(canonicalize(entry.seq));
        if (printed < limit) {
            std::cout << cycle_notation(entry.seq) << '\n';
            printed++;
        }
    }
    std::cout << "registers tested: " << readout.total_tested << '\n';
    std::cout << "flags: " << readout.entries.size() << '\n';
    std::cout << "distinct cycles: " << distinct.size() << '\n';
    if (!or_reduce(readout)) {
        std::cout << "no Hamiltonian circuit\n";
    }
    return 0;
}

int cmd_compile(const std::string &path, const std::string &mode_str, bool no_lower) {
    Graph g = load_graph(path);
    Encoding enc = Encoding::for_vertices(g.num_vertices());
    Circuit c = compile(g, parse_mode_or_die(mode_str), enc, {.lower = !no_lower});
    std::cout << emit_netlist(c);
    return 0;
}

int cmd_resources(const std::string &path, const std::string &range) {
    if (!range.empty()) {
        auto dots = range.find("..");
        if (dots == std::string::npos) {
            std::cerr << "bad --n-range, expected a..b\n";
            return kExitInput;
        }
        uint32_t lo = static_cast<uint32_t>(std::stoul(range.substr(0, dots)));
        uint32_t hi = static_cast<uint32_t>(std::stoul(range.substr(dots + 2)));
        std::cout << totbits_table(lo, hi);
        return 0;
    }
    Graph g = load_graph(path);
    Encoding enc = Encoding::for_vertices(g.num_vertices());
    ResourceReport report = evaluate_formulas(enc.n, enc.k, g.num_edges());
    for (Mode mode : {Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced}) {
        add_measurement(report, compile(g, mode, enc));
    }
    std::cout << format_report(report);
    return 0;
}

// Compares batch flags (all three modes, or a replayed netlist) against
// the backtracking oracle; for nk <= 16 also sweeps the full code space.
int verify_graph(const Graph &g, const Circuit *replay) {
    Encoding enc = Encoding::for_vertices(g.num_vertices());
    CycleSet cycles = find_cycles(g);
    std::set<uint64_t> expected_ranks;
    for (const auto &seq : expected_fixed_start(cycles)) {
        expected_ranks.insert(rank_initialization({seq, 0}));
    }
    std::vector<Circuit> circuits;
    if (replay) {
        circuits.push_back(*replay);
    } else {
        for (Mode mode : {Mode::CmosReduced, Mode::CmosOneshot, Mode::ReversibleFull}) {
            circuits.push_back(compile(g, mode, enc));
        }
    }
    for (const auto &c : circuits) {
        FlagReadout readout = run_batch(c, enc);
        std::set<uint64_t> got;
        for (const auto &entry : readout.entries) {
            got.insert(entry.id);
        }
        if (got != expected_ranks) {
            for (uint64_t r = 0; r < readout.total_tested; r++) {
                if (expected_ranks.count(r) != got.count(r)) {
                    std::cerr << "mode " << to_string(c.mode) << ": first mismatch at rank " << r
                              << " (expected " << expected_ranks.count(r) << ", got "
                              << got.count(r) << ")\n";
                    break;
                }
            }
            return kExitMismatch;
        }
    }
    if (!replay && enc.n * enc.k <= 16) {
        Circuit full = compile(g, Mode::ReversibleFull, enc);
        std::set<uint64_t> expected_codes;
        for (const auto &seq : expected_full_codes(cycles)) {
            expected_codes.insert(pack_code(seq, enc));
        }
        std::set<uint64_t> got;
        for (const auto &entry : run_full_code_space(full, enc).entries) {
            got.insert(entry.id);
        }
        if (got != expected_codes) {
            std::cerr << "full-code sweep disagrees with oracle\n";
            return kExitMismatch;
        }
    }
    return 0;
}

int cmd_verify(const std::string &path, const std::string &netlist_path, unsigned random_count,
               uint32_t n, double edge_prob, uint64_t seed) {
    if (random_count > 0) {
        std::mt19937 rng(static_cast<uint32_t>(seed));
        for (unsigned i = 0; i < random_count; i++) {
            Graph g = random_graph(n, edge_prob, rng);
            if (int rc = verify_graph(g, nullptr)) {
                std::cerr << "random graph " << i << " failed\n";
                return rc;
            }
        }
        std::cout << "verified " << random_count << " random graphs\n";
        return 0;
    }
    Graph g = load_graph(path);
    if (!netlist_path.empty()) {
        std::ifstream in(netlist_path);
        if (!in) {
            std::cerr << "cannot open " << netlist_path << '\n';
            return kExitInput;
        }
        Circuit replay = parse_netlist(in);
        int rc = verify_graph(g, &replay);
        std::cout << (rc == 0 ? "ok\n" : "mismatch\n");
        return rc;
    }
    int rc = verify_graph(g, nullptr);
    std::cout << (rc == 0 ? "ok\n" : "mismatch\n");
    return rc;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hamiltonian cycle search via compiled reversible register circuits"};
    app.require_subcommand(1);

    std::string graph_path, mode_str = "cmos-reduced", range, netlist_path;
    bool full_codes = false, no_lower = false;
    unsigned workers = 1, random_count = 0;
    uint64_t limit = UINT64_MAX, seed = 0;
    uint32_t rand_n = 5;
    double edge_prob = 0.5;

    auto *find = app.add_subcommand("find", "enumerate Hamiltonian cycles");
    find->add_option("graph", graph_path, "graph file")->required();
    find->add_option("--mode", mode_str, "reversible-full | cmos-oneshot | cmos-reduced");
    find->add_flag("--full-codes", full_codes, "sweep all 2^(nk) codes (reversible-full)");
    find->add_option("--workers", workers, "parallel batch workers");
    find->add_option("--limit", limit, "max cycles printed");

    auto *compile_cmd = app.add_subcommand("compile", "emit the circuit netlist");
    compile_cmd->add_option("graph", graph_path, "graph file")->required();
    compile_cmd->add_option("--mode", mode_str, "circuit mode");
    compile_cmd->add_flag("--no-lower", no_lower, "keep MCN gates unlowered");

    auto *resources = app.add_subcommand("resources", "formula vs measured accounting");
    resources->add_option("graph", graph_path, "graph file");
    resources->add_option("--n-range", range, "emit CSV for n in a..b");

    auto *verify = app.add_subcommand("verify", "compare circuit flags against the oracle");
    verify->add_option("graph", graph_path, "graph file");
    verify->add_option("--netlist", netlist_path, "replay this netlist instead of compiling");
    verify->add_option("--random", random_count, "number of random graphs");
    verify->add_option("--n", rand_n, "random graph vertex count");
    verify->add_option("--edge-prob", edge_prob, "random edge probability");
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (find->parsed()) {
            return cmd_find(graph_path, mode_str, full_codes, workers, limit);
        }
        if (compile_cmd->parsed()) {
            return cmd_compile(graph_path, mode_str, no_lower);
        }
        if (resources->parsed()) {
            if (range.empty() && graph_path.empty()) {
                std::cerr << "resources needs a graph file or --n-range\n";
                return kExitInput;
            }
            return cmd_resources(graph_path, range);
        }
        if (verify->parsed()) {
            if (random_count == 0 && graph_path.empty()) {
                std::cerr << "verify needs a graph file or --random\n";
                return kExitInput;
            }
            return cmd_verify(graph_path, netlist_path, random_count, rand_n, edge_prob, seed);
        }
    } catch (const GraphParseError &e) {
        std::cerr << "graph parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NetlistParseError &e) {
        std::cerr << "netlist parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::overflow_error &e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
