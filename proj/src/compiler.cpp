// Copyright 2026 The gqca Authors
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


#include "gqca/compiler.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gqca/decompose.hpp"
#include "gqca/errors.hpp"

namespace gqca {

namespace {

constexpr double kPi = std::numbers::pi;

void require_goldilocks_hadamard(const RuleSpec &rule) {
    if (rule.rule_number() != 6 || (rule.activation() - hadamard()).cwiseAbs().maxCoeff() > 1e-12) {
        throw NotImplementedError("compilation supports rule 6 with V = H only");
    }
}

// Controlled-H pairs (control, target) of the four stages of one cycle. The
// even-site update is stages 0 and 1, the odd-site update stages 2 and 3.
std::vector<std::vector<std::pair<int, int>>> cycle_stages(int length) {
    std::vector<std::vector<std::pair<int, int>>> stages(4);
    for (int e = 2; e <= length; e += 2) {
        stages[0].push_back({e - 1, e});
        if (e + 1 <= length) {
            stages[1].push_back({e + 1, e});
        }
    }
    for (int o = 1; o <= length; o += 2) {
        if (o >= 3) {
            stages[2].push_back({o - 1, o});
        }
        if (o + 1 <= length) {
            stages[3].push_back({o + 1, o});
        }
    }
    return stages;
}

// Appends moments holding the k-th gate of every list in parallel.
void append_layered(CompiledCircuit &out, const std::vector<std::vector<Gate>> &lists, int cycle) {
    size_t depth = 0;
    for (const auto &l : lists) {
        depth = std::max(depth, l.size());
    }
    for (size_t k = 0; k < depth; ++k) {
        Moment m;
        m.cycle = cycle;
        for (const auto &l : lists) {
            if (k < l.size()) {
                m.add(l[k]);
            }
        }
        out.moments.push_back(std::move(m));
    }
}

// Per-site gate lists between consecutive two-qubit moments.
std::vector<Gate> gates_on_site(const std::vector<Gate> &seq, int site) {
    std::vector<Gate> out;
    for (const Gate &g : seq) {
        if (g.targets[0] == site) {
            out.push_back(g);
        }
    }
    return out;
}

// Alternating layout: slots[s] holds the single-qubit sub-moments before
// two-qubit moment s (slots.back() is the trailing layer).
struct Layout {
    int length = 0;
    std::vector<std::vector<Moment>> slots;
    std::vector<Moment> two_qubit;

    explicit Layout(int n_two_qubit, int length_) : length(length_), slots(static_cast<size_t>(n_two_qubit) + 1) {
        two_qubit.resize(static_cast<size_t>(n_two_qubit));
    }

    // Places a single-qubit gate into slot s after anything already on its
    // site there.
    void place(size_t s, const Gate &g) {
        auto &subs = slots[s];
        int last = -1;
        for (size_t k = 0; k < subs.size(); ++k) {
            if (subs[k].touches(g.targets[0])) {
                last = static_cast<int>(k);
            }
        }
        const size_t at = static_cast<size_t>(last + 1);
        if (at == subs.size()) {
            subs.emplace_back();
        }
        subs[at].add(g);
    }

    CompiledCircuit flatten() const {
        CompiledCircuit c;
        c.length = length;
        for (size_t s = 0; s < slots.size(); ++s) {
            const int cycle = s < two_qubit.size() ? two_qubit[s].cycle : -1;
            for (const Moment &m : slots[s]) {
                if (!m.gates.empty()) {
                    Moment copy = m;
                    copy.cycle = cycle;
                    std::sort(copy.gates.begin(), copy.gates.end(),
                              [](const Gate &a, const Gate &b) { return a.targets[0] < b.targets[0]; });
                    c.moments.push_back(std::move(copy));
                }
            }
            if (s < two_qubit.size()) {
                c.moments.push_back(two_qubit[s]);
            }
        }
        return c;
    }
};

int count_two_qubit_moments(const CompiledCircuit &circuit) {
    int n = 0;
    for (const Moment &m : circuit.moments) {
        n += m.has_two_qubit_gate() ? 1 : 0;
    }
    return n;
}

}  // namespace

const FsimAngles &CalibrationParams::at(int a, int b) const {
    auto it = couplers.find({std::min(a, b), std::max(a, b)});
    return it == couplers.end() ? nominal : it->second;
}

CalibrationParams CalibrationParams::ideal(double parasitic) {
    CalibrationParams c;
    c.nominal = FsimAngles{kPi / 4, 0.0, 0.0, 0.0, parasitic};
    return c;
}

CompiledCircuit lower_cycles(const RuleSpec &rule, int length, int cycles, const CalibrationParams &calibration,
                             const CompileOptions &options) {
    require_goldilocks_hadamard(rule);
    if (length < 2) {
        throw DomainError("compilation needs at least two sites");
    }
    if (cycles < 0) {
        throw DomainError("cycle count must be non-negative");
    }
    CompiledCircuit out;
    out.length = length;
    const auto stages = cycle_stages(length);
    for (int cycle = 0; cycle < cycles; ++cycle) {
        for (const auto &pairs : stages) {
            // Each CH becomes Y^{-1/4}, CZ, Y^{1/4}; each CZ becomes three
            // single-qubit segments around two native gates.
            std::vector<std::vector<Gate>> segments(3);
            std::vector<Gate> first_native, second_native;
            for (const auto &[control, target] : pairs) {
                const int i = std::min(control, target), j = std::max(control, target);
                const FsimAngles &hw = calibration.at(i, j);
                const double design_phi = options.compensate ? hw.phi : 0.0;
                std::vector<Gate> seq = decompose_cphase(i, j, kPi, design_phi, options.design_theta);
                Gate native = fsim_gate(i, j, hw);
                if (options.floquet) {
                    native = with_floquet_correction(native);
                }
                size_t seg = 0;
                segments[0].push_back(ypow_gate(target, -0.25));
                for (const Gate &g : seq) {
                    if (g.arity() == 2) {
                        (seg == 0 ? first_native : second_native).push_back(native);
                        ++seg;
                    } else {
                        segments[seg].push_back(g);
                    }
                }
                segments[2].push_back(ypow_gate(target, 0.25));
            }
            for (size_t seg = 0; seg < 3; ++seg) {
                std::vector<std::vector<Gate>> lists;
                for (int site = 1; site <= length; ++site) {
                    lists.push_back(gates_on_site(segments[seg], site));
                }
                append_layered(out, lists, cycle);
                if (seg < 2) {
                    Moment m;
                    m.cycle = cycle;
                    for (const Gate &g : seg == 0 ? first_native : second_native) {
                        m.add(g);
                    }
                    out.moments.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

CompiledCircuit merge_single_qubit_runs(const CompiledCircuit &circuit) {
    const int length = circuit.length;
    Layout layout(count_two_qubit_moments(circuit), length);
    struct Run {
        Mat2 product = Mat2::Identity();
        std::vector<Gate> gates;
        size_t anchor = 0;
    };
    std::vector<Run> runs(static_cast<size_t>(length) + 1);
    auto flush = [&](int site) {
        Run &r = runs[static_cast<size_t>(site)];
        if (!r.gates.empty()) {
            if (r.gates.size() == 1 && r.gates[0].kind == GateKind::PhXZ) {
                layout.place(r.anchor, r.gates[0]);
            } else {
                const PhXZParams p = phxz_from_matrix(r.product);
                layout.place(r.anchor, phxz_gate(site, p.a, p.x, p.z));
            }
        }
        r.product = Mat2::Identity();
        r.gates.clear();
    };
    size_t ordinal = 0;
    for (const Moment &m : circuit.moments) {
        const bool is_two = m.has_two_qubit_gate();
        for (const Gate &g : m.gates) {
            if (g.arity() == 2) {
                continue;
            }
            const int site = g.targets[0];
            Run &r = runs[static_cast<size_t>(site)];
            if (g.echo) {
                flush(site);
                layout.place(ordinal, g);
                r.anchor = ordinal + 1;
                continue;
            }
            r.product = Mat2(g.matrix()) * r.product;
            r.gates.push_back(g);
        }
        if (is_two) {
            Moment two;
            two.cycle = m.cycle;
            for (const Gate &g : m.gates) {
                if (g.arity() == 2) {
                    flush(g.targets[0]);
                    flush(g.targets[1]);
                    runs[static_cast<size_t>(g.targets[0])].anchor = ordinal + 1;
                    runs[static_cast<size_t>(g.targets[1])].anchor = ordinal + 1;
                    two.add(g);
                }
            }
            layout.two_qubit[ordinal] = std::move(two);
            ++ordinal;
        }
    }
    for (int site = 1; site <= length; ++site) {
        flush(site);
    }
    return layout.flatten();
}

CompiledCircuit insert_spin_echoes(const CompiledCircuit &circuit) {
    const int length = circuit.length;
    const int n_two = count_two_qubit_moments(circuit);
    Layout layout(n_two, length);
    // Timeline tokens per site: 2s is slot s, 2s+1 is two-qubit moment s.
    std::vector<std::vector<char>> busy(static_cast<size_t>(length) + 1,
                                        std::vector<char>(static_cast<size_t>(2 * n_two + 1), 0));
    size_t ordinal = 0;
    for (const Moment &m : circuit.moments) {
        const bool is_two = m.has_two_qubit_gate();
        for (const Gate &g : m.gates) {
            const size_t token = is_two ? 2 * ordinal + 1 : 2 * ordinal;
            busy[static_cast<size_t>(g.targets[0])][token] = 1;
            if (g.arity() == 2) {
                busy[static_cast<size_t>(g.targets[1])][token] = 1;
            }
            if (is_two) {
                continue;
            }
            layout.place(ordinal, g);
        }
        if (is_two) {
            Moment two;
            two.cycle = m.cycle;
            for (const Gate &g : m.gates) {
                if (g.arity() == 2) {
                    two.add(g);
                }
            }
            layout.two_qubit[ordinal] = std::move(two);
            // Single-qubit gates sharing a two-qubit moment stay with it.
            for (const Gate &g : m.gates) {
                if (g.arity() == 1) {
                    layout.two_qubit[ordinal].add(g);
                }
            }
            ++ordinal;
        }
    }
    for (int site = 1; site <= length; ++site) {
        const auto &b = busy[static_cast<size_t>(site)];
        int prev_busy = 0;
        std::vector<size_t> idle_slots;
        // State preparation and measurement bound the first and last spans.
        for (int token = 0; token <= static_cast<int>(b.size()); ++token) {
            if (token == static_cast<int>(b.size()) || b[static_cast<size_t>(token)]) {
                if (prev_busy >= 0) {
                    const size_t n = idle_slots.size();
                    const size_t fill = n < 2 ? 0 : (n % 2 == 0 ? n : n - 1);
                    for (size_t k = 0; k < fill; ++k) {
                        Gate x = pauli_gate(GateKind::PauliX, site);
                        x.echo = true;
                        layout.place(idle_slots[k], x);
                    }
                }
                prev_busy = token;
                idle_slots.clear();
            } else if (token % 2 == 0) {
                idle_slots.push_back(static_cast<size_t>(token / 2));
            }
        }
    }
    return layout.flatten();
}

CompiledCircuit compile_cycles(const RuleSpec &rule, int length, int cycles, const CalibrationParams &calibration,
                               const CompileOptions &options) {
    CompiledCircuit c = lower_cycles(rule, length, cycles, calibration, options);
    if (options.merge) {
        c = merge_single_qubit_runs(c);
    }
    if (options.echoes) {
        c = insert_spin_echoes(c);
    }
    return c;
}

CompiledCircuit compile_cycle(const RuleSpec &rule, int length, const CalibrationParams &calibration,
                              const CompileOptions &options) {
    return compile_cycles(rule, length, 1, calibration, options);
}

GateVolume compile_stats(const RuleSpec &rule, int length, int cycles) {
    const CalibrationParams cal = CalibrationParams::ideal(kDefaultParasiticPhi);
    const CompiledCircuit full = compile_cycles(rule, length, cycles, cal);
    const GateCountReport report = count_gates(full);
    const GateCountReport raw = count_gates(lower_cycles(rule, length, 1, cal));
    GateVolume v;
    v.length = length;
    v.cycles = cycles;
    if (!report.cycles.empty()) {
        v.two_qubit_per_cycle = report.cycles.front().two_qubit;
        v.single_qubit_per_cycle = report.cycles.front().single_qubit;
        v.layers_per_cycle = report.cycles.front().two_qubit_layers;
    }
    if (!raw.cycles.empty()) {
        v.unmerged_single_qubit_per_cycle = raw.cycles.front().single_qubit;
    }
    v.cumulative_two_qubit = report.total_two_qubit;
    v.cumulative_single_qubit = report.total_single_qubit;
    return v;
}

}  // namespace gqca
