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


#include "gqca/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <thread>

#include "gqca/circuit.hpp"
#include "gqca/errors.hpp"
#include "gqca/invariant.hpp"
#include "gqca/qca.hpp"
#include "gqca/rng.hpp"

namespace gqca {

namespace {

using json = nlohmann::json;

// Stream purposes within one (trajectory, cycle).
constexpr uint64_t kGateStream = 1;
constexpr uint64_t kSampleStream = 2;
constexpr uint64_t kReadoutStream = 3;

void check_probability(double p, const char *field) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(field, "probability must lie in [0, 1]");
    }
}

void check_positive(double v, const char *field) {
    if (!(v > 0.0)) {
        throw ValidationError(field, "must be positive");
    }
}

void sample_into(const Statevector &state, uint64_t shots, CounterRng &rng, CountsTable &out) {
    std::vector<double> cdf = state.probabilities();
    for (size_t k = 1; k < cdf.size(); ++k) {
        cdf[k] += cdf[k - 1];
    }
    const double total = cdf.back();
    for (uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // Skip zero-probability states that share the same cumulative value.
        if (it == cdf.end()) {
            it = std::prev(cdf.end());
            while (it != cdf.begin() && *std::prev(it) == *it) {
                --it;
            }
        }
        out.add(static_cast<uint64_t>(it - cdf.begin()));
    }
}

void readout_into(const CountsTable &counts, const NoiseModel &model, CounterRng &rng, CountsTable &out) {
    const int length = counts.length();
    for (const auto &[index, n] : counts.entries()) {
        for (uint64_t shot = 0; shot < n; ++shot) {
            uint64_t bits = index;
            for (int b = 0; b < length; ++b) {
                const uint64_t m = uint64_t{1} << b;
                const double p = (bits & m) ? model.e_r1 : model.e_r0;
                if (p > 0.0 && rng.uniform() < p) {
                    bits ^= m;
                }
            }
            out.add(bits);
        }
    }
}

const Mat2 &pauli(int k) {
    static const Mat2 table[4] = {identity2(), pauli_x(), pauli_y(), pauli_z()};
    return table[k];
}

// One quantum-jump step of amplitude damping with jump probability gamma on
// the |1> population of `site`.
void damp(Statevector &state, int site, double gamma, CounterRng &rng) {
    const uint64_t mask = site_mask(state.num_qubits(), site);
    std::span<Complex> amps = state.amplitudes();
    double excited = 0.0;
    for (uint64_t k = 0; k < amps.size(); ++k) {
        if (k & mask) {
            excited += std::norm(amps[k]);
        }
    }
    if (excited == 0.0) {
        return;
    }
    const double total = state.norm_squared();
    if (rng.uniform() * total < gamma * excited) {
        const double scale = 1.0 / std::sqrt(excited);
        for (uint64_t k = 0; k < amps.size(); ++k) {
            if (k & mask) {
                amps[k ^ mask] = amps[k] * scale;
                amps[k] = 0.0;
            }
        }
        return;
    }
    const double keep = std::sqrt(1.0 - gamma);
    const double scale = 1.0 / std::sqrt(total - gamma * excited);
    for (uint64_t k = 0; k < amps.size(); ++k) {
        amps[k] *= (k & mask) ? keep * scale : scale;
    }
}

void apply_noisy_moment(Statevector &state, const Moment &moment, const NoiseModel &model, CounterRng &rng) {
    for (const Gate &gate : moment.gates) {
        apply_gate(state, gate);
        if (gate.arity() == 1) {
            if (model.e1 > 0.0 && rng.uniform() < model.e1) {
                state.apply_1q(pauli(1 + static_cast<int>(rng.below(3))), gate.targets[0]);
            }
        } else if (model.e2 > 0.0 && rng.uniform() < model.e2) {
            const int p = 1 + static_cast<int>(rng.below(15));
            if (p / 4 != 0) {
                state.apply_1q(pauli(p / 4), gate.targets[0]);
            }
            if (p % 4 != 0) {
                state.apply_1q(pauli(p % 4), gate.targets[1]);
            }
        }
    }
    const double gamma = model.damping_probability(moment.has_two_qubit_gate() ? model.tau_2q_ns : model.tau_1q_ns);
    if (gamma > 0.0) {
        for (int site = 1; site <= state.num_qubits(); ++site) {
            damp(state, site, gamma, rng);
        }
    }
}

bool compiled_rule(const RuleSpec &rule) {
    return rule.rule_number() == 6 && (rule.activation() - hadamard()).cwiseAbs().maxCoeff() < 1e-12;
}

uint64_t shots_for(const NoisyRunOptions &options, int trajectory) {
    const auto n = static_cast<uint64_t>(options.trajectories);
    const uint64_t base = options.shots / n;
    return base + (static_cast<uint64_t>(trajectory) < options.shots % n ? 1 : 0);
}

}  // namespace

void NoiseModel::validate() const {
    check_probability(e1, "e1");
    check_probability(e2, "e2");
    check_probability(e_r0, "e_r0");
    check_probability(e_r1, "e_r1");
    check_positive(t1_us, "T1_us");
    check_positive(tau_1q_ns, "tau_1q_ns");
    check_positive(tau_2q_ns, "tau_2q_ns");
}

NoiseModel NoiseModel::noiseless() {
    NoiseModel m;
    m.e1 = m.e2 = m.e_r0 = m.e_r1 = 0.0;
    m.t1_us = std::numeric_limits<double>::infinity();
    return m;
}

bool NoiseModel::gate_noise_free() const {
    return e1 == 0.0 && e2 == 0.0 && std::isinf(t1_us);
}

double NoiseModel::damping_probability(double tau_ns) const {
    if (std::isinf(t1_us)) {
        return 0.0;
    }
    return -std::expm1(-tau_ns / (1000.0 * t1_us));
}

std::string noise_model_to_json(const NoiseModel &model) {
    json j;
    j["e1"] = model.e1;
    j["e2"] = model.e2;
    j["e_r0"] = model.e_r0;
    j["e_r1"] = model.e_r1;
    // JSON has no infinity; null stands for no relaxation.
    j["T1_us"] = std::isinf(model.t1_us) ? json(nullptr) : json(model.t1_us);
    j["tau_1q_ns"] = model.tau_1q_ns;
    j["tau_2q_ns"] = model.tau_2q_ns;
    return j.dump(2);
}

NoiseModel noise_model_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError("noise", e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("noise", "expected a JSON object");
    }
    NoiseModel m;
    auto read = [&](const char *key, double &field) {
        if (!j.contains(key)) {
            return;
        }
        const json &v = j.at(key);
        if (v.is_null() && std::string(key) == "T1_us") {
            field = std::numeric_limits<double>::infinity();
        } else if (v.is_number()) {
            field = v.get<double>();
        } else {
            throw ValidationError(key, "expected a number");
        }
    };
    for (const auto &[key, value] : j.items()) {
        static const char *known[] = {"e1", "e2", "e_r0", "e_r1", "T1_us", "tau_1q_ns", "tau_2q_ns"};
        if (std::none_of(std::begin(known), std::end(known), [&](const char *k) { return key == k; })) {
            throw ValidationError(key, "unknown noise model field");
        }
    }
    read("e1", m.e1);
    read("e2", m.e2);
    read("e_r0", m.e_r0);
    read("e_r1", m.e_r1);
    read("T1_us", m.t1_us);
    read("tau_1q_ns", m.tau_1q_ns);
    read("tau_2q_ns", m.tau_2q_ns);
    m.validate();
    return m;
}

CountsTable sample_counts(const Statevector &state, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shot count must be at least 1");
    }
    state.check_normalized();
    CountsTable out(state.num_qubits());
    CounterRng rng(seed, {kSampleStream});
    sample_into(state, shots, rng, out);
    return out;
}

CountsTable apply_readout_error(const CountsTable &counts, const NoiseModel &model, uint64_t seed) {
    if (model.e_r0 == 0.0 && model.e_r1 == 0.0) {
        return counts;
    }
    CountsTable out(counts.length());
    CounterRng rng(seed, {kReadoutStream});
    readout_into(counts, model, rng, out);
    return out;
}

CountsTable uniform_random_counts(int length, uint64_t shots, uint64_t seed) {
    CountsTable out(length);
    CounterRng rng(seed, {});
    const uint64_t mask = length == 64 ? ~uint64_t{0} : (uint64_t{1} << length) - 1;
    for (uint64_t s = 0; s < shots; ++s) {
        out.add(rng() & mask);
    }
    return out;
}

Distribution exact_uniform_distribution(int length) {
    if (length < 1 || length > kMaxStatevectorQubits) {
        throw CapacityError("exact uniform distribution limited to L <= " + std::to_string(kMaxStatevectorQubits));
    }
    const uint64_t dim = uint64_t{1} << length;
    Distribution d;
    d.length = length;
    d.entries.reserve(dim);
    for (uint64_t k = 0; k < dim; ++k) {
        d.entries.push_back({k, 1.0 / static_cast<double>(dim)});
    }
    return d;
}

Distribution exact_uniform_distribution(const BitString &reference) {
    const std::vector<uint64_t> states = sector_states(reference);
    Distribution d;
    d.length = reference.size();
    for (uint64_t k : states) {
        d.entries.push_back({k, 1.0 / static_cast<double>(states.size())});
    }
    return d;
}

std::vector<CountsTable> noisy_evolve(const BitString &initial, const RuleSpec &rule, int t_max,
                                      const NoiseModel &model, const NoisyRunOptions &options) {
    model.validate();
    if (t_max < 0) {
        throw DomainError("t_max must be non-negative");
    }
    if (options.trajectories < 1 || options.shots < static_cast<uint64_t>(options.trajectories)) {
        throw DomainError("need at least one trajectory and one shot per trajectory");
    }
    const int length = initial.size();
    if (length > kMaxStatevectorQubits) {
        throw CapacityError("noisy evolution limited to L <= " + std::to_string(kMaxStatevectorQubits));
    }
    const bool gate_level = compiled_rule(rule);
    if (!gate_level && !model.gate_noise_free()) {
        throw NotImplementedError("gate-level noise needs a compiled rule (T6 with V = H)");
    }
    CompiledCircuit cycle;
    if (gate_level) {
        cycle = compile_cycle(rule, length, options.calibration, options.compile);
    }
    Moment prep;
    for (int site = 1; site <= length; ++site) {
        if (initial.bit(site)) {
            prep.add(pauli_gate(GateKind::PauliX, site));
        }
    }

    auto run_trajectory = [&](int traj, std::vector<CountsTable> &out) {
        const uint64_t shots = shots_for(options, traj);
        const auto id = static_cast<uint64_t>(traj);
        Statevector state(length);
        for (int t = 0; t <= t_max; ++t) {
            CounterRng gate_rng(options.seed, {id, static_cast<uint64_t>(t), kGateStream});
            if (t == 0) {
                apply_noisy_moment(state, prep, model, gate_rng);
            } else if (gate_level) {
                for (const Moment &m : cycle.moments) {
                    apply_noisy_moment(state, m, model, gate_rng);
                }
            } else {
                apply_cycle_in_place(state, rule);
            }
            state.check_normalized();
            CounterRng sample_rng(options.seed, {id, static_cast<uint64_t>(t), kSampleStream});
            CountsTable raw(length);
            sample_into(state, shots, sample_rng, raw);
            if (model.e_r0 == 0.0 && model.e_r1 == 0.0) {
                out[static_cast<size_t>(t)].merge(raw);
            } else {
                CounterRng readout_rng(options.seed, {id, static_cast<uint64_t>(t), kReadoutStream});
                readout_into(raw, model, readout_rng, out[static_cast<size_t>(t)]);
            }
        }
    };

    const int workers = std::clamp(options.workers, 1, options.trajectories);
    std::vector<std::vector<CountsTable>> partial(static_cast<size_t>(workers),
                                                  std::vector<CountsTable>(static_cast<size_t>(t_max + 1),
                                                                           CountsTable(length)));
    auto work = [&](int w) {
        for (int traj = w; traj < options.trajectories; traj += workers) {
            run_trajectory(traj, partial[static_cast<size_t>(w)]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    std::vector<CountsTable> result = std::move(partial[0]);
    for (size_t w = 1; w < partial.size(); ++w) {
        for (size_t t = 0; t < result.size(); ++t) {
            result[t].merge(partial[w][t]);
        }
    }
    return result;
}

std::vector<CountsTable> noiseless_counts(const BitString &initial, const RuleSpec &rule, int t_max, uint64_t shots,
                                          uint64_t seed) {
    std::vector<CountsTable> out;
    evolve_each(initial, rule, t_max, [&](int t, const Statevector &state) {
        out.push_back(sample_counts(state, shots, stream_key(seed, {static_cast<uint64_t>(t)})));
    });
    return out;
}

}  // namespace gqca
