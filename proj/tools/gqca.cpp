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


#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gqca/chain_select.hpp"
#include "gqca/compiler.hpp"
#include "gqca/config.hpp"
#include "gqca/errors.hpp"
#include "gqca/experiment.hpp"
#include "gqca/format.hpp"
#include "gqca/invariant.hpp"
#include "gqca/postselect.hpp"
#include "gqca/sampler.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace gqca;

namespace {

struct Globals {
    uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    int workers = 1;
};

std::string read_file(const fs::path &p) {
    std::ifstream in(p);
    if (!in) {
        throw std::runtime_error("cannot open " + p.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to <out>/<name>, or to stdout when no output directory is set.
void emit(const Globals &g, const std::string &name, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(g.out);
    std::ofstream(fs::path(g.out) / name) << text;
    std::cerr << "wrote " << (fs::path(g.out) / name).string() << '\n';
}

CountsTable load_counts(const fs::path &p) {
    std::ifstream in(p);
    if (!in) {
        throw std::runtime_error("cannot open " + p.string());
    }
    return read_counts_csv(in);
}

// Column `name` of a CSV with a header row; '#' lines are skipped.
std::vector<double> read_column(const fs::path &p, const std::string &name) {
    std::ifstream in(p);
    if (!in) {
        throw std::runtime_error("cannot open " + p.string());
    }
    std::string line;
    int column = -1;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            cells.push_back(cell);
        }
        if (column < 0) {
            auto it = std::find(cells.begin(), cells.end(), name);
            if (it == cells.end()) {
                throw std::runtime_error(p.string() + " has no column '" + name + "'");
            }
            column = static_cast<int>(it - cells.begin());
            continue;
        }
        const std::string &cell = cells.at(static_cast<size_t>(column));
        values.push_back(cell == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(cell));
    }
    return values;
}

ExperimentConfig load_config(const std::string &path, const Globals &g) {
    ExperimentConfig c = path.empty() ? config_from_json("{}") : config_from_file(path);
    if (g.seed_set) {
        c.seeds = {g.seed};
    }
    return c;
}

// NaN and infinities become null.
json number(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gqca: Goldilocks quantum cellular automata toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Random seed (overrides config seeds)")->each([&](const std::string &) {
        g.seed_set = true;
    });
    app.add_option("--out", g.out, "Output directory");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string config_path;

    // emulate
    auto *emulate = app.add_subcommand("emulate", "Noiseless QCA evolution: populations and trajectory JSON");
    int em_length = 21, em_rule = 6, em_t = 30, em_isolated = 1;
    std::string em_activation = "H";
    std::vector<int> em_flips;
    bool em_states = false;
    emulate->add_option("--config", config_path, "Experiment config (L, rule, activation, flips, t_max)");
    emulate->add_option("-L,--length", em_length, "Chain length");
    emulate->add_option("--rule", em_rule, "Rule number 0..15");
    emulate->add_option("--activation", em_activation, "H, X, Y, Z or I");
    emulate->add_option("--flips", em_flips, "1-based sites initially |1>");
    emulate->add_option("--isolated", em_isolated, "Number of equally spaced isolated flips");
    emulate->add_option("--t-max", em_t, "Cycles");
    emulate->add_flag("--states", em_states, "Also write raw statevectors (little-endian complex128)");

    // sample
    auto *sample = app.add_subcommand("sample", "Shot counts per cycle, optionally under a noise model");
    uint64_t sa_shots = 0;
    std::string sa_noise;
    sample->add_option("--config", config_path, "Experiment config");
    sample->add_option("--shots", sa_shots, "Shots per cycle");
    sample->add_option("--noise", sa_noise, "Noise model JSON file");

    // postselect
    auto *post = app.add_subcommand("postselect", "Keep shots in the reference's domain-wall sector");
    std::string ps_reference;
    std::vector<std::string> ps_inputs;
    uint64_t ps_min_kept = kDefaultMinKept;
    post->add_option("--reference", ps_reference, "Reference bitstring")->required();
    post->add_option("inputs", ps_inputs, "Counts CSV files, one per cycle in order")->required();
    post->add_option("--min-kept", ps_min_kept, "Minimum kept shots before flagging");

    // analyze
    auto *analyze = app.add_subcommand("analyze", "Mutual-information network and measures of counts");
    std::vector<std::string> an_inputs;
    double an_threshold = kDefaultEdgeThreshold;
    analyze->add_option("inputs", an_inputs, "Counts CSV files")->required();
    analyze->add_option("--threshold", an_threshold, "Edge threshold for path lengths");

    // window
    auto *window = app.add_subcommand("window", "Coherence window from a measures series and a baseline");
    std::string wi_series, wi_baseline, wi_column = "C";
    window->add_option("--series", wi_series, "measures CSV (cycle,C,...)")->required();
    window->add_option("--baseline", wi_baseline, "baseline CSV (cycle,C,...)")->required();
    window->add_option("--column", wi_column, "Column compared in both files");

    // run
    auto *run = app.add_subcommand("run", "Full pipeline for one experiment config");
    run->add_option("--config", config_path, "Experiment config")->required();

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Run a base config over axis overrides");
    bool sw_resume = false;
    sweep->add_option("--config", config_path, "Sweep JSON {base, axes}")->required();
    sweep->add_flag("--resume", sw_resume, "Reuse points whose results already exist");

    // compile-stats
    auto *stats = app.add_subcommand("compile-stats", "Native gate volume of compiled T6 cycles");
    int cs_length = 23, cs_cycles = 12;
    std::string cs_circuit;
    stats->add_option("-L,--length", cs_length, "Chain length");
    stats->add_option("--cycles", cs_cycles, "Cycles");
    stats->add_option("--circuit", cs_circuit, "Also write the compiled circuit JSON here");

    // chain-pick
    auto *pick = app.add_subcommand("chain-pick", "Rank qubit chains on a device error map");
    std::string cp_metrics;
    int cp_length = 11, cp_count = 4;
    pick->add_option("--metrics", cp_metrics, "Device metrics JSON")->required();
    pick->add_option("-L,--length", cp_length, "Chain length");
    pick->add_option("--count", cp_count, "Number of chains");

    // sectors
    auto *sectors = app.add_subcommand("sectors", "Relative sector dimension versus L with exponential fits");
    int se_min = 3, se_max = 23, se_k = 4;
    sectors->add_option("--min-L", se_min, "Smallest chain length");
    sectors->add_option("--max-L", se_max, "Largest chain length");
    sectors->add_option("--max-k", se_k, "Largest number of |1> runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*emulate) {
            ExperimentConfig c;
            if (!config_path.empty()) {
                c = load_config(config_path, g);
            } else {
                c.length = em_length;
                c.rule_number = em_rule;
                c.activation_name = em_activation;
                c.activation = named_activation(em_activation);
                c.flips = em_flips;
                c.isolated_flips = em_isolated;
                c.t_max = em_t;
                c.validate();
            }
            const Trajectory t = evolve(c.initial(), c.rule(), c.t_max, em_states);
            std::ostringstream js;
            write_trajectory_json(t, js);
            emit(g, "trajectory.json", js.str());
            if (em_states) {
                if (g.out.empty()) {
                    throw std::runtime_error("--states needs --out");
                }
                for (size_t k = 0; k < t.states.size(); ++k) {
                    std::ofstream bin(fs::path(g.out) / ("state_" + std::to_string(k) + ".bin"), std::ios::binary);
                    write_statevector_binary(t.states[k], bin);
                }
            }
        } else if (*sample) {
            ExperimentConfig c = load_config(config_path, g);
            if (sa_shots > 0) {
                c.shots = sa_shots;
                c.trajectories = static_cast<int>(std::min<uint64_t>(c.trajectories, sa_shots));
            }
            if (!sa_noise.empty()) {
                c.noise = noise_model_from_json(read_file(sa_noise));
            }
            c.validate();
            const uint64_t seed = c.seeds.front();
            std::vector<CountsTable> counts;
            if (c.noise) {
                NoisyRunOptions opt;
                opt.trajectories = c.trajectories;
                opt.shots = c.shots;
                opt.seed = seed;
                opt.workers = g.workers;
                opt.calibration = CalibrationParams::ideal(c.parasitic_phi);
                opt.compile.compensate = c.compensate;
                counts = noisy_evolve(c.initial(), c.rule(), c.t_max, *c.noise, opt);
            } else {
                counts = noiseless_counts(c.initial(), c.rule(), c.t_max, c.shots, seed);
            }
            for (size_t t = 0; t < counts.size(); ++t) {
                std::ostringstream os;
                write_counts_csv(counts[t], os);
                if (g.out.empty()) {
                    std::cout << "# cycle " << t << '\n' << os.str();
                } else {
                    emit(g, "counts_cycle_" + std::to_string(t) + ".csv", os.str());
                }
            }
        } else if (*post) {
            const BitString ref = BitString::from_string(ps_reference);
            std::vector<RetainedPoint> series;
            for (size_t k = 0; k < ps_inputs.size(); ++k) {
                const FilterResult r = filter_counts(load_counts(ps_inputs[k]), ref, ps_min_kept);
                series.push_back({static_cast<int>(k), r.retained_fraction, r.kept.total()});
                if (r.insufficient) {
                    std::cerr << "warning: " << ps_inputs[k] << " keeps " << r.kept.total()
                              << " shots (insufficient statistics)\n";
                }
                if (!g.out.empty()) {
                    std::ostringstream os;
                    write_counts_csv(r.kept, os);
                    emit(g, "kept_" + fs::path(ps_inputs[k]).filename().string(), os.str());
                }
            }
            std::ostringstream os;
            write_retained_csv(series, os);
            emit(g, "retained.csv", os.str());
        } else if (*analyze) {
            std::ostringstream measures;
            measures << "file,C,ell,ell_reachable,unreachable_pairs\n";
            for (const std::string &input : an_inputs) {
                const MINetwork net = shannon_mi(load_counts(input));
                const NetworkMeasures m = network_measures(net, an_threshold);
                measures << input << ',' << format_double(m.clustering) << ',' << format_double(m.path.mean) << ','
                         << format_double(m.path.reachable_mean) << ',' << m.path.unreachable_pairs << '\n';
                if (!g.out.empty()) {
                    const std::string stem = fs::path(input).stem().string();
                    std::ostringstream mat, edges, graph;
                    write_matrix_csv(net, mat);
                    write_edge_list_csv(net, edges);
                    write_graphml(net, graph);
                    emit(g, stem + "_mi.csv", mat.str());
                    emit(g, stem + "_edges.csv", edges.str());
                    emit(g, stem + ".graphml", graph.str());
                }
            }
            emit(g, "measures.csv", measures.str());
        } else if (*window) {
            const CoherenceWindow w =
                coherence_window(read_column(wi_series, wi_column), read_column(wi_baseline, wi_column));
            json j;
            j["empty"] = w.empty;
            j["t_start"] = w.empty ? json(nullptr) : json(w.t_start);
            j["t_end"] = w.empty ? json(nullptr) : json(w.t_end);
            emit(g, "window.json", j.dump(2) + "\n");
        } else if (*run) {
            const ExperimentConfig c = load_config(config_path, g);
            const ExperimentResult r = run_experiment(c, {g.workers, g.out});
            json j;
            j["config_hash"] = r.hash;
            if (!g.out.empty()) {
                j["directory"] = (fs::path(g.out) / r.hash).string();
            }
            j["window"] = {{"empty", r.window.window.empty},
                           {"t_start", r.window.window.t_start},
                           {"t_end", r.window.window.t_end},
                           {"clustering_mean", number(r.window.clustering_mean)},
                           {"path_mean", number(r.window.path_mean)}};
            std::cout << j.dump(2) << '\n';
        } else if (*sweep) {
            const SweepSpec spec = sweep_from_json(read_file(config_path), fs::path(config_path).parent_path());
            const auto summaries = run_sweep(spec, {g.workers, g.out}, sw_resume);
            std::cout << "hash,L,flips,window_start,window_end,C_mean,C_std\n";
            for (const PointSummary &s : summaries) {
                std::cout << s.hash << ',' << s.length << ',' << s.flips << ','
                          << (s.window.window.empty ? "" : std::to_string(s.window.window.t_start)) << ','
                          << (s.window.window.empty ? "" : std::to_string(s.window.window.t_end)) << ','
                          << format_double(s.window.clustering_mean) << ','
                          << format_double(s.window.clustering_std) << '\n';
            }
        } else if (*stats) {
            const GateVolume v = compile_stats(RuleSpec::goldilocks(), cs_length, cs_cycles);
            json j;
            j["L"] = v.length;
            j["cycles"] = v.cycles;
            j["two_qubit_per_cycle"] = v.two_qubit_per_cycle;
            j["single_qubit_per_cycle"] = v.single_qubit_per_cycle;
            j["layers_per_cycle"] = v.layers_per_cycle;
            j["unmerged_single_qubit_per_cycle"] = v.unmerged_single_qubit_per_cycle;
            j["cumulative_two_qubit"] = v.cumulative_two_qubit;
            j["cumulative_single_qubit"] = v.cumulative_single_qubit;
            emit(g, "compile_stats.json", j.dump(2) + "\n");
            if (!cs_circuit.empty()) {
                const CompiledCircuit c = compile_cycles(RuleSpec::goldilocks(), cs_length, cs_cycles,
                                                         CalibrationParams::ideal(kDefaultParasiticPhi));
                std::ofstream(cs_circuit) << circuit_to_json(c) << '\n';
            }
        } else if (*pick) {
            const DeviceMetrics m = device_metrics_from_json(read_file(cp_metrics));
            json chains = json::array();
            for (const RankedChain &c : chain_select(m, cp_length, cp_count)) {
                json coords = json::array();
                for (int q : c.qubits) {
                    coords.push_back({m.qubits[static_cast<size_t>(q)].row, m.qubits[static_cast<size_t>(q)].col});
                }
                chains.push_back({{"qubits", coords}, {"cost", c.cost}});
            }
            emit(g, "chains.json", json{{"chains", chains}}.dump(2) + "\n");
        } else if (*sectors) {
            std::ostringstream table, fits;
            table << "L,k,count,relative\n";
            fits << "k,amplitude,decay_length,r_squared\n";
            for (int k = 1; k <= se_k; ++k) {
                std::vector<double> xs, ys;
                for (int length = se_min; length <= se_max; ++length) {
                    if (2 * k > length + 1) {
                        continue;
                    }
                    const SectorDimension d = sector_dimension(length, k);
                    table << length << ',' << k << ',' << d.count << ',' << format_double(d.relative) << '\n';
                    xs.push_back(length);
                    ys.push_back(d.relative);
                }
                if (xs.size() >= 2) {
                    const ExponentialFit f = fit_exponential(xs, ys);
                    fits << k << ',' << format_double(f.amplitude) << ',' << format_double(f.decay_length) << ','
                         << format_double(f.r_squared) << '\n';
                }
            }
            emit(g, "sector_dimensions.csv", table.str());
            emit(g, "sector_fits.csv", fits.str());
        }
    } catch (const ValidationError &e) {
        std::cerr << "invalid input at " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
