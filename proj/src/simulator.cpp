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

#include "hamcirc/simulator.hpp"

#include <stdexcept>
#include <thread>

#include "hamcirc/enumerator.hpp"

namespace hamcirc {

void apply_gate(RegisterState &state, const Gate &gate) {
    if (gate.target >= state.width()) {
        throw std::out_of_range("gate target out of range");
    }
    bool all = true;
    for (auto c : gate.controls) {
        if (c >= state.width()) {
            throw std::out_of_range("gate control out of range");
        }
        all = all && state.get(c);
    }
    switch (gate.kind) {
        case GateKind::Not:
        case GateKind::Cnot:
        case GateKind::Toffoli:
        case GateKind::Mcn:
            if (all) {
                state.flip(gate.target);
            }
            break;
        case GateKind::Reset:
            state.set(gate.target, false);
            break;
        case GateKind::CReset:
            if (all) {
                state.set(gate.target, false);
            }
            break;
    }
}

RegisterState run(const Circuit &c, const RegisterState &state) {
    if (state.width() != c.layout.total) {
        throw std::invalid_argument("register width does not match circuit layout");
    }
    RegisterState out = state;
    for (const auto &g : c.gates) {
        apply_gate(out, g);
    }
    return out;
}

namespace {

void run_range(const Circuit &c, const Encoding &enc, uint64_t lo, uint64_t hi,
               std::vector<FlagEntry> &out) {
    uint32_t flag = c.layout.flag_line();
    InitializationStream stream(enc.n, lo, hi);
    Initialization init;
    while (stream.next(init)) {
        RegisterState state = encode_initialization(init, enc, c.layout.total);
        state = run(c, state);
        if (state.get(flag)) {
            out.push_back({init.rank, decode_workspace(state, enc)});
        }
    }
}

} // namespace

FlagReadout run_batch(const Circuit &c, const Encoding &enc, uint64_t lo, uint64_t hi,
                      unsigned workers) {
    FlagReadout readout;
    readout.total_tested = hi - lo;
    if (workers <= 1 || hi - lo < 2 * workers) {
        run_range(c, enc, lo, hi, readout.entries);
    } else {
        std::vector<std::vector<FlagEntry>> parts(workers);
        std::vector<std::thread> threads;
        uint64_t span = hi - lo;
        for (unsigned w = 0; w < workers; w++) {
            uint64_t a = lo + span * w / workers;
            uint64_t b = lo + span * (w + 1) / workers;
            threads.emplace_back(run_range, std::cref(c), std::cref(enc), a, b,
                                 std::ref(parts[w]));
        }
        for (auto &t : threads) {
            t.join();
        }
        for (auto &part : parts) {
            readout.entries.insert(readout.entries.end(), part.begin(), part.end());
        }
    }
    readout.any_flag = !readout.entries.empty();
    return readout;
}

FlagReadout run_batch(const Circuit &c, const Encoding &enc, unsigned workers) {
    return run_batch(c, enc, 0, count_initializations(enc.n), workers);
}

FlagReadout run_full_code_space(const Circuit &c, const Encoding &enc) {
    uint32_t nk = enc.n * enc.k;
    if (nk > 20) {
        throw std::invalid_argument("full code space needs nk <= 20, got nk = " +
                                    std::to_string(nk));
    }
    if (c.mode != Mode::ReversibleFull) {
        throw std::invalid_argument("full code space requires reversible-full mode");
    }
    FlagReadout readout;
    readout.total_tested = uint64_t{1} << nk;
    uint32_t flag = c.layout.flag_line();
    for (uint64_t code = 0; code < readout.total_tested; code++) {
        RegisterState state = encode_raw_code(code, enc, c.layout.total);
        state = run(c, state);
        if (state.get(flag)) {
            readout.entries.push_back({code, decode_workspace(state, enc)});
        }
    }
    readout.any_flag = !readout.entries.empty();
    return readout;
}

} // namespace hamcirc
