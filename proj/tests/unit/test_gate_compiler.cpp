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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gqca/chain_select.hpp"
#include "gqca/compiler.hpp"
#include "gqca/decompose.hpp"
#include "gqca/errors.hpp"
#include "gqca/qca.hpp"

namespace gqca {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

MatX kron(const MatX &a, const MatX &b) {
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Full-space operator of a gate. Two-qubit gates on adjacent sites are
// embedded with a swap conjugation when the first target is the right one.
MatX embed(const Gate &g, int length) {
    const MatX id2 = MatX::Identity(2, 2);
    if (g.arity() == 1) {
        MatX out = MatX::Identity(1, 1);
        for (int s = 1; s <= length; ++s) {
            out = kron(out, s == g.targets[0] ? g.matrix() : id2);
        }
        return out;
    }
    const int lo = std::min(g.targets[0], g.targets[1]);
    MatX m = g.matrix();
    if (g.targets[0] > g.targets[1]) {
        MatX swap = MatX::Zero(4, 4);
        swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
        m = swap * m * swap;
    }
    EXPECT_EQ(std::abs(g.targets[0] - g.targets[1]), 1);
    MatX out = MatX::Identity(1, 1);
    for (int s = 1; s <= length; ++s) {
        if (s == lo) {
            out = kron(out, m);
            ++s;
        } else {
            out = kron(out, id2);
        }
    }
    return out;
}

MatX sequence_oracle(const std::vector<Gate> &seq, int length) {
    MatX u = MatX::Identity(Eigen::Index{1} << length, Eigen::Index{1} << length);
    for (const Gate &g : seq) {
        u = embed(g, length) * u;
    }
    return u;
}

MatX circuit_oracle(const CompiledCircuit &c) {
    std::vector<Gate> seq;
    for (const Moment &m : c.moments) {
        seq.insert(seq.end(), m.gates.begin(), m.gates.end());
    }
    return sequence_oracle(seq, c.length);
}


TEST(NativeGates, AllKindsUnitary) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::vector<Gate> gates = {phxz_gate(1, ang(rng), 0.3, ang(rng)),
                               rz_gate(1, ang(rng)),
                               rx_gate(1, ang(rng)),
                               ypow_gate(1, ang(rng)),
                               pauli_gate(GateKind::PauliX, 1),
                               pauli_gate(GateKind::PauliY, 1),
                               pauli_gate(GateKind::PauliZ, 1),
                               cz_gate(1, 2),
                               cphase_gate(1, 2, ang(rng)),
                               ch_gate(1, 2),
                               fsim_gate(1, 2, {ang(rng), ang(rng), ang(rng), ang(rng), ang(rng)})};
    for (const Gate &g : gates) {
        EXPECT_LT(unitarity_error(g.matrix()), 1e-12) << gate_kind_name(g.kind);
    }
}

TEST(NativeGates, SqrtIswapDaggerIsUnperturbedFractionalIswap) {
    MatX want = MatX::Zero(4, 4);
    const double h = 1.0 / std::sqrt(2.0);
    want(0, 0) = want(3, 3) = 1.0;
    want(1, 1) = want(2, 2) = h;
    want(1, 2) = want(2, 1) = -kI * h;
    EXPECT_LT((MatX(fsim_matrix(FsimAngles{kPi / 4, 0, 0, 0, 0})) - want).cwiseAbs().maxCoeff(), 1e-15);
    // The iSWAP squared to its adjoint: (sqrt iSWAP^dagger)^2 maps |01> to -i|10>.
    MatX sq = want * want;
    EXPECT_NEAR(std::abs(sq(2, 1) + kI), 0.0, 1e-15);
}

TEST(NativeGates, HalfTurnConventions) {
    // X^1 is exactly the Pauli X and Z^1 is Pauli Z.
    EXPECT_LT((MatX(xpow_matrix(1.0)) - MatX(pauli_x())).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((MatX(zpow_matrix(1.0)) - MatX(pauli_z())).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((MatX(ypow_matrix(1.0)) - MatX(pauli_y())).cwiseAbs().maxCoeff(), 1e-15);
    // Y^t equals Ry(pi t) up to global phase.
    EXPECT_LT(phase_aligned_distance(ypow_matrix(0.25), ry_matrix(kPi / 4)), 1e-15);
}

TEST(PhXZ, CanonicalExamples) {
    PhXZParams x = phxz_from_matrix(pauli_x());
    EXPECT_NEAR(x.a, 0.0, 1e-15);
    EXPECT_NEAR(x.x, 1.0, 1e-15);
    EXPECT_NEAR(x.z, 0.0, 1e-15);
    PhXZParams hh = phxz_from_matrix(hadamard() * hadamard());
    EXPECT_NEAR(hh.x, 0.0, 1e-15);
    EXPECT_NEAR(hh.z, 0.0, 1e-15);
    EXPECT_EQ(hh.a, 0.0);
}

TEST(PhXZ, RandomRunsMergeToEquivalentGate) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        Mat2 product = Mat2::Identity();
        for (int k = 0; k < 5; ++k) {
            Mat2 g;
            switch (rng() % 4) {
                case 0:
                    g = rz_matrix(ang(rng));
                    break;
                case 1:
                    g = rx_matrix(ang(rng));
                    break;
                case 2:
                    g = ypow_matrix(ang(rng));
                    break;
                default:
                    g = random_unitary(rng());
            }
            product = g * product;
        }
        PhXZParams p = phxz_from_matrix(product);
        EXPECT_GE(p.x, 0.0);
        EXPECT_LE(p.x, 1.0);
        EXPECT_GT(p.a, -1.0);
        EXPECT_LE(p.a, 1.0);
        EXPECT_GT(p.z, -1.0);
        EXPECT_LE(p.z, 1.0);
        EXPECT_LT(phase_aligned_distance(phxz_matrix(p.a, p.x, p.z), product), 1e-10);
    }
}

TEST(PhXZ, EdgeCasesStayEquivalent) {
    for (const Mat2 &u : {Mat2(pauli_y()), Mat2(pauli_x() * rz_matrix(0.7)), Mat2(rz_matrix(1.3)),
                          Mat2(zpow_matrix(1.0)), Mat2(-Mat2::Identity())}) {
        PhXZParams p = phxz_from_matrix(u);
        EXPECT_LT(phase_aligned_distance(phxz_matrix(p.a, p.x, p.z), u), 1e-12);
        if (p.x == 0.0) {
            EXPECT_EQ(p.a, 0.0);
        }
        if (p.x == 1.0) {
            EXPECT_EQ(p.z, 0.0);
        }
    }
}

TEST(Decompose, ControlledHadamard) {
    for (auto [c, t] : {std::pair{1, 2}, std::pair{2, 1}}) {
        std::vector<Gate> seq = decompose_ch(c, t);
        ASSERT_EQ(seq.size(), 3u);
        MatX got = sequence_oracle(seq, 2);
        MatX want = embed(ch_gate(c, t), 2);
        EXPECT_LT(phase_aligned_distance(got, want), 1e-12);
        // Control in |1>: the target branch receives H.
        const int cbit = c == 1 ? 2 : 1, tbit = t == 1 ? 2 : 1;
        Complex ratio = got(cbit | tbit, cbit) / got(cbit, cbit);
        EXPECT_NEAR(std::abs(ratio - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(got(cbit, cbit)), 1.0 / std::sqrt(2.0), 1e-12);
        // Control in |0>: identity on the target up to phase.
        EXPECT_NEAR(std::abs(got(tbit, tbit)), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(got(0, 0)), 1.0, 1e-12);
    }
    EXPECT_THROW(decompose_ch(1, 3), TopologyError);
}

TEST(Decompose, CzWithoutParasiticPhase) {
    std::vector<Gate> seq = decompose_cphase(1, 2, kPi, 0.0, kPi / 4);
    int natives = 0;
    for (const Gate &g : seq) {
        natives += g.kind == GateKind::FractionalIswap;
    }
    EXPECT_EQ(natives, 2);
    EXPECT_LT(phase_aligned_distance(sequence_oracle(seq, 2), cz_matrix()), 1e-9);
}

TEST(Decompose, ZeroPhaseIsIdentity) {
    CphaseParameters p = cphase_parameters(0.0, 0.0, kPi / 4);
    EXPECT_EQ(p.alpha, 0.0);
    EXPECT_LT(phase_aligned_distance(sequence_oracle(decompose_cphase(1, 2, 0.0, 0.0, kPi / 4), 2),
                                     MatX::Identity(4, 4)),
              1e-9);
}

TEST(Decompose, CzThroughParasiticPrimitive) {
    std::vector<Gate> seq = decompose_cphase(1, 2, kPi, kPi / 23, kPi / 4);
    for (const Gate &g : seq) {
        if (g.kind == GateKind::FractionalIswap) {
            // Each primitive is K(pi/4) CPHASE(pi/23).
            MatX want = MatX(sqrt_iswap_dagger_matrix()) * MatX(cphase_matrix(kPi / 23));
            EXPECT_LT((g.matrix() - want).cwiseAbs().maxCoeff(), 1e-15);
        }
    }
    EXPECT_LT(phase_aligned_distance(sequence_oracle(seq, 2), cz_matrix()), 1e-9);
}

TEST(Decompose, RandomFeasibleTargets) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    while (checked < 100) {
        const double phi = 2 * kPi * u(rng) - kPi;
        const double parasitic = 0.6 * u(rng) - 0.3;
        const double theta = 0.3 + 1.2 * u(rng);
        const double sp = std::pow(std::sin(parasitic / 2), 2);
        const double target = std::pow(std::sin(reduce_phase(phi) / 4), 2);
        if (target < sp || target > std::pow(std::sin(theta), 2)) {
            EXPECT_THROW(cphase_parameters(phi, parasitic, theta), InfeasibleError);
            continue;
        }
        MatX got = sequence_oracle(decompose_cphase(2, 3, phi, parasitic, theta), 3);
        MatX want = kron(MatX::Identity(2, 2), MatX(cphase_matrix(phi)));
        ASSERT_LT(phase_aligned_distance(got, want), 1e-9) << phi << " " << parasitic << " " << theta;
        ++checked;
    }
    EXPECT_THROW(cphase_parameters(kPi, 0.5, 0.1), InfeasibleError);
}

TEST(Floquet, NoDriftNeedsNoCorrection) {
    FloquetCorrection c = floquet_correct(FsimAngles{kPi / 4, 0, 0, 0, kPi / 23});
    EXPECT_EQ(c.pre_i, 0.0);
    EXPECT_EQ(c.pre_j, 0.0);
    EXPECT_EQ(c.post_i, 0.0);
    EXPECT_EQ(c.post_j, 0.0);
}

TEST(Floquet, CorrectionRemovesZetaAndGamma) {
    const FsimAngles drifted{kPi / 4, 0.1, 0.0, 0.05, kPi / 23};
    const Gate corrected = with_floquet_correction(fsim_gate(1, 2, drifted));
    const MatX want = fsim_matrix(FsimAngles{kPi / 4, 0, 0, 0, kPi / 23});
    EXPECT_LT((corrected.matrix() - want).cwiseAbs().maxCoeff(), 1e-10);
    // The explicit sequence agrees up to global phase.
    EXPECT_LT(phase_aligned_distance(sequence_oracle(floquet_sequence(fsim_gate(1, 2, drifted)), 2), want), 1e-10);
}

TEST(Floquet, ResidualGrowsWithUncharacterizedChi) {
    const MatX want = fsim_matrix(FsimAngles{0.7, 0, 0, 0, 0.1});
    double previous = 0.0;
    for (double chi : {0.0, 0.05, 0.1, 0.2, 0.4}) {
        Gate g = with_floquet_correction(fsim_gate(1, 2, FsimAngles{0.7, -0.3, chi, 0.2, 0.1}));
        const double residual = (g.matrix() - want).cwiseAbs().maxCoeff();
        if (chi == 0.0) {
            EXPECT_LT(residual, 1e-10);
        } else {
            EXPECT_GT(residual, previous);
        }
        previous = residual;
    }
}

TEST(Compiler, IdealCycleMatchesQcaUnitary) {
    for (int length = 2; length <= 6; ++length) {
        CompiledCircuit c = compile_cycle(RuleSpec::goldilocks(), length, CalibrationParams::ideal(0.0));
        const MatX want = cycle_unitary_dense(RuleSpec::goldilocks(), length);
        EXPECT_LT(phase_aligned_distance(circuit_oracle(c), want), 1e-8) << "L=" << length;
        EXPECT_LT(phase_aligned_distance(circuit_unitary(c), want), 1e-8) << "L=" << length;
    }
}

TEST(Compiler, ParasiticCompensation) {
    const RuleSpec rule = RuleSpec::goldilocks();
    const CalibrationParams cal = CalibrationParams::ideal(kPi / 23);
    for (int length = 3; length <= 6; ++length) {
        const MatX u = cycle_unitary_dense(rule, length);
        const MatX u2 = u * u;
        EXPECT_LT(phase_aligned_distance(circuit_unitary(compile_cycle(rule, length, cal)), u), 1e-8);
        CompiledCircuit two = compile_cycles(rule, length, 2, cal);
        EXPECT_LT(phase_aligned_distance(circuit_unitary(two), u2), 1e-8);
        CompileOptions off;
        off.compensate = false;
        CompiledCircuit raw = compile_cycles(rule, length, 2, cal, off);
        EXPECT_GT(phase_aligned_distance(circuit_unitary(raw), u2), 1e-3) << "L=" << length;
    }
}

TEST(Compiler, CharacterizedDriftIsCorrected) {
    CalibrationParams cal = CalibrationParams::ideal(kPi / 23);
    cal.couplers[{1, 2}] = FsimAngles{kPi / 4, 0.12, 0.0, -0.04, 0.14};
    cal.couplers[{3, 4}] = FsimAngles{kPi / 4, -0.07, 0.0, 0.03, 0.12};
    const RuleSpec rule = RuleSpec::goldilocks();
    const MatX want = cycle_unitary_dense(rule, 4);
    EXPECT_LT(phase_aligned_distance(circuit_unitary(compile_cycle(rule, 4, cal)), want), 1e-8);
    CompileOptions no_floquet;
    no_floquet.floquet = false;
    EXPECT_GT(phase_aligned_distance(circuit_unitary(compile_cycle(rule, 4, cal, no_floquet)), want), 1e-3);
}

TEST(Compiler, GateCountContract) {
    const RuleSpec rule = RuleSpec::goldilocks();
    for (int length = 3; length <= 23; ++length) {
        for (int cycles : {1, 3}) {
            CompiledCircuit c = compile_cycles(rule, length, cycles, CalibrationParams::ideal(kPi / 23));
            GateCountReport r = count_gates(c);
            ASSERT_EQ(static_cast<int>(r.cycles.size()), cycles);
            for (const CycleGateCount &cc : r.cycles) {
                EXPECT_EQ(cc.two_qubit, 4 * (length - 1)) << "L=" << length;
                EXPECT_EQ(cc.single_qubit, 8 * length) << "L=" << length << " cycle " << cc.cycle;
                EXPECT_EQ(cc.two_qubit_layers, 8);
                EXPECT_EQ(cc.single_qubit_layers, 8);
            }
            EXPECT_EQ(r.trailing_single_qubit, length);
            // Layers strictly alternate, starting and ending with single-qubit ones.
            for (size_t m = 0; m < c.moments.size(); ++m) {
                EXPECT_EQ(c.moments[m].has_two_qubit_gate(), m % 2 == 1);
            }
        }
    }
    GateVolume v = compile_stats(rule, 23, 12);
    EXPECT_EQ(v.two_qubit_per_cycle, 88);
    EXPECT_EQ(v.cumulative_two_qubit, 1056);
    EXPECT_EQ(compile_stats(rule, 5, 1).single_qubit_per_cycle, 40);
    EXPECT_EQ(compile_stats(rule, 5, 1).two_qubit_per_cycle, 16);
}

TEST(Compiler, UnsupportedRule) {
    EXPECT_THROW(compile_cycle(RuleSpec(6, pauli_x()), 4, CalibrationParams::ideal()), NotImplementedError);
    EXPECT_THROW(compile_cycle(RuleSpec(9, hadamard()), 4, CalibrationParams::ideal()), NotImplementedError);
}

TEST(Echoes, NeutralAndEvenPerSpan) {
    const RuleSpec rule = RuleSpec::goldilocks();
    CompileOptions no_echo;
    no_echo.echoes = false;
    CompiledCircuit merged = compile_cycles(rule, 5, 2, CalibrationParams::ideal(kPi / 23), no_echo);
    CompiledCircuit echoed = insert_spin_echoes(merged);
    EXPECT_LT((circuit_unitary(merged) - circuit_unitary(echoed)).cwiseAbs().maxCoeff(), 1e-12);
    int echoes = 0;
    for (const Moment &m : echoed.moments) {
        for (const Gate &g : m.gates) {
            if (g.echo) {
                EXPECT_EQ(g.kind, GateKind::PauliX);
                ++echoes;
            }
        }
    }
    EXPECT_GT(echoes, 0);
    EXPECT_EQ(echoes % 2, 0);
    // Re-inserting finds no idle span left.
    EXPECT_EQ(circuit_to_json(insert_spin_echoes(echoed)), circuit_to_json(echoed));
}

TEST(Echoes, IdleSpanOfTwoLayersGetsXX) {
    CompiledCircuit c;
    c.length = 2;
    auto one = [](Gate g) {
        Moment m;
        m.add(g);
        return m;
    };
    c.moments = {one(phxz_gate(1, 0, 0.5, 0)), one(cz_gate(1, 2)), one(phxz_gate(2, 0, 0.5, 0)),
                 one(phxz_gate(2, 0, 0.5, 0)), one(phxz_gate(2, 0, 0.5, 0)), one(cz_gate(1, 2))};
    // Site 1 idles through the layer(s) between the CZs.
    CompiledCircuit merged = merge_single_qubit_runs(c);
    CompiledCircuit echoed = insert_spin_echoes(merged);
    int x_on_1 = 0;
    for (const Moment &m : echoed.moments) {
        for (const Gate &g : m.gates) {
            x_on_1 += g.echo && g.targets[0] == 1;
        }
    }
    EXPECT_EQ(x_on_1, 0);

    CompiledCircuit spaced;
    spaced.length = 3;
    spaced.moments = {one(cz_gate(1, 2)), one(phxz_gate(2, 0, 0.5, 0)), one(cz_gate(2, 3)),
                      one(phxz_gate(2, 0, 0.5, 0)), one(cz_gate(2, 3)), one(cz_gate(1, 2))};
    CompiledCircuit e2 = insert_spin_echoes(merge_single_qubit_runs(spaced));
    x_on_1 = 0;
    for (const Moment &m : e2.moments) {
        for (const Gate &g : m.gates) {
            x_on_1 += g.echo && g.targets[0] == 1;
        }
    }
    EXPECT_EQ(x_on_1, 2);
    EXPECT_LT((circuit_unitary(e2) - circuit_unitary(spaced)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Merge, IdempotentAndEquivalent) {
    const RuleSpec rule = RuleSpec::goldilocks();
    const CalibrationParams cal = CalibrationParams::ideal(kPi / 23);
    CompiledCircuit raw = lower_cycles(rule, 4, 2, cal);
    CompiledCircuit merged = merge_single_qubit_runs(raw);
    EXPECT_LT(phase_aligned_distance(circuit_unitary(merged), circuit_unitary(raw)), 1e-10);
    EXPECT_EQ(circuit_to_json(merge_single_qubit_runs(merged)), circuit_to_json(merged));
    CompiledCircuit full = insert_spin_echoes(merged);
    EXPECT_EQ(circuit_to_json(merge_single_qubit_runs(full)), circuit_to_json(full));
    EXPECT_GT(count_gates(raw).cycles[0].single_qubit, count_gates(merged).cycles[0].single_qubit);
}

TEST(Circuit, MomentsRejectOverlapAndRoundTripJson) {
    Moment m;
    m.add(cz_gate(1, 2));
    EXPECT_THROW(m.add(rz_gate(2, 0.1)), DomainError);
    CompiledCircuit c = compile_cycle(RuleSpec::goldilocks(), 3, CalibrationParams::ideal(kPi / 23));
    CompiledCircuit back = circuit_from_json(circuit_to_json(c));
    EXPECT_EQ(back.length, c.length);
    EXPECT_LT((circuit_unitary(back) - circuit_unitary(c)).cwiseAbs().maxCoeff(), 1e-14);
}

// All simple paths by brute force over vertex permutations.
double brute_best_cost(const DeviceMetrics &m, int length, std::vector<int> *best_path) {
    const int n = static_cast<int>(m.qubits.size());
    double best = 1e300;
    std::vector<int> idx(static_cast<size_t>(n));
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != length) {
            continue;
        }
        std::vector<int> sel;
        for (int q = 0; q < n; ++q) {
            if (mask >> q & 1) {
                sel.push_back(q);
            }
        }
        do {
            bool ok = true;
            for (size_t k = 0; k + 1 < sel.size(); ++k) {
                ok = ok && m.adjacent(sel[k], sel[k + 1]);
            }
            if (ok && chain_cost(m, sel) < best) {
                best = chain_cost(m, sel);
                *best_path = sel;
            }
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return best;
}

DeviceMetrics grid(int rows, int cols) {
    DeviceMetrics m;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m.qubits.push_back({r, c, 0.05, 15.0});
        }
    }
    return m;
}

TEST(ChainSelect, AvoidsBadQubit) {
    DeviceMetrics m = grid(2, 3);
    m.qubits[4].e_r1 = 0.9;
    std::vector<int> brute_path;
    const double best = brute_best_cost(m, 4, &brute_path);
    std::vector<RankedChain> picked = chain_select(m, 4, 1);
    ASSERT_EQ(picked.size(), 1u);
    EXPECT_NEAR(picked[0].cost, best, 1e-15);
    EXPECT_EQ(std::count(picked[0].qubits.begin(), picked[0].qubits.end(), 4), 0);
}

TEST(ChainSelect, TieBreakAndLine) {
    DeviceMetrics m = grid(2, 3);
    std::vector<RankedChain> picked = chain_select(m, 3, 1);
    // Uniform metrics: the lexicographically first path (0,0)-(0,1)-(0,2).
    EXPECT_EQ(picked[0].qubits, (std::vector<int>{0, 1, 2}));
    DeviceMetrics line = grid(1, 5);
    std::vector<RankedChain> all = enumerate_chains(line, 5);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].qubits, (std::vector<int>{0, 1, 2, 3, 4}));
    EXPECT_THROW(chain_select(line, 6, 1), InfeasibleError);
    DeviceMetrics split = grid(1, 2);
    split.qubits[1].col = 5;
    EXPECT_THROW(chain_select(split, 2, 1), InfeasibleError);
}

TEST(ChainSelect, PrefersDisjointChains) {
    DeviceMetrics m = grid(2, 3);
    std::vector<RankedChain> picked = chain_select(m, 3, 2);
    ASSERT_EQ(picked.size(), 2u);
    for (int q : picked[0].qubits) {
        EXPECT_EQ(std::count(picked[1].qubits.begin(), picked[1].qubits.end(), q), 0);
    }
    // Coupler errors are charged along the path.
    m.e2[{0, 1}] = 0.5;
    EXPECT_NEAR(chain_cost(m, {0, 1, 2}) - chain_cost(m, {3, 4, 5}), 0.5, 1e-12);
}

TEST(ChainSelect, ParsesDeviceJson) {
    DeviceMetrics m = device_metrics_from_json(
        R"({"qubits":[{"row":1,"col":6,"e_r1":0.06,"t1_us":14},{"row":2,"col":6,"e_r1":0.05,"t1_us":16}],)"
        R"("couplers":[{"a":[1,6],"b":[2,6],"e2":0.012}]})");
    EXPECT_EQ(m.qubits.size(), 2u);
    EXPECT_DOUBLE_EQ(m.coupler_error(0, 1), 0.012);
    EXPECT_THROW(device_metrics_from_json(R"({"qubits":[{"row":0,"col":0,"e_r1":2}]})"), DomainError);
}

}  // namespace
}  // namespace gqca
