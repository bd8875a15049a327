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


#ifndef GQCA_SAMPLER_HPP
#define GQCA_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gqca/compiler.hpp"
#include "gqca/counts.hpp"
#include "gqca/rule.hpp"
#include "gqca/statevector.hpp"

namespace gqca {

/// Hardware-inspired iid noise: Pauli errors after gates, amplitude damping
/// per layer, readout flips at measurement.
struct NoiseModel {
    double e1 = 0.001;
    double e2 = 0.014;
    /// P(read 1 | 0) and P(read 0 | 1).
    double e_r0 = 0.02;
    double e_r1 = 0.07;
    double t1_us = 15.0;
    double tau_1q_ns = 25.0;
    double tau_2q_ns = 32.0;

    /// Throws ValidationError naming the offending field.
    void validate() const;
    /// Every error rate zero; T1 effectively infinite.
    static NoiseModel noiseless();
    bool gate_noise_free() const;
    /// 1 - exp(-tau / T1) for a layer lasting `tau_ns`.
    double damping_probability(double tau_ns) const;
};

/// JSON object with keys e1, e2, e_r0, e_r1, T1_us, tau_1q_ns, tau_2q_ns.
std::string noise_model_to_json(const NoiseModel &model);
NoiseModel noise_model_from_json(const std::string &text);

/// Multinomial sample of `shots` z-basis measurements. Throws NormError for
/// a non-normalized state and DomainError for shots == 0.
CountsTable sample_counts(const Statevector &state, uint64_t shots, uint64_t seed);

/// Flips every recorded bit independently: 0 -> 1 with e_r0, 1 -> 0 with
/// e_r1. Preserves the total.
CountsTable apply_readout_error(const CountsTable &counts, const NoiseModel &model, uint64_t seed);

/// `shots` independent uniform L-bit strings.
CountsTable uniform_random_counts(int length, uint64_t shots, uint64_t seed);
/// Exact uniform distribution over all 2^L strings.
Distribution exact_uniform_distribution(int length);
/// Exact uniform distribution over the invariant sector of `reference`.
Distribution exact_uniform_distribution(const BitString &reference);

struct NoisyRunOptions {
    int trajectories = 100;
    /// Total shots per cycle, split as evenly as possible over trajectories.
    uint64_t shots = 100000;
    uint64_t seed = 0;
    int workers = 1;
    CalibrationParams calibration;
    CompileOptions compile;
};

/// Counts after each cycle t = 0..t_max, taken from quantum-jump
/// trajectories through the compiled gate sequence: a preparation layer of
/// X gates, then one standalone compiled circuit per cycle. After every gate
/// a Pauli error strikes with probability e1 (single-qubit) or e2
/// (two-qubit); after every layer each qubit undergoes an amplitude-damping
/// step for the layer's duration; readout error is applied to the samples.
///
/// Random streams are keyed by (seed, trajectory, cycle, purpose), so the
/// result does not depend on `workers`. Rules other than T6 with V = H fall
/// back to the exact cycle when the gate noise is zero and throw
/// NotImplementedError otherwise.
std::vector<CountsTable> noisy_evolve(const BitString &initial, const RuleSpec &rule, int t_max,
                                      const NoiseModel &model, const NoisyRunOptions &options);

/// Counts of the exact evolution after each cycle t = 0..t_max, sampled
/// with stream (seed, t).
std::vector<CountsTable> noiseless_counts(const BitString &initial, const RuleSpec &rule, int t_max, uint64_t shots,
                                          uint64_t seed);

}  // namespace gqca

#endif  // GQCA_SAMPLER_HPP
