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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>

#include "gqca/compiler.hpp"
#include "gqca/config.hpp"
#include "gqca/errors.hpp"
#include "gqca/experiment.hpp"
#include "gqca/infonet.hpp"
#include "gqca/invariant.hpp"
#include "gqca/postselect.hpp"
#include "gqca/qca.hpp"
#include "gqca/sampler.hpp"

namespace py = pybind11;
using namespace gqca;

namespace {

using CountsDict = std::map<std::string, uint64_t>;

CountsDict to_dict(const CountsTable &counts) {
    CountsDict out;
    for (const auto &[index, n] : counts.entries()) {
        out[BitString(counts.length(), index).str()] = n;
    }
    return out;
}

CountsTable from_dict(const CountsDict &counts) {
    if (counts.empty()) {
        throw DomainError("counts dictionary is empty");
    }
    CountsTable table(static_cast<int>(counts.begin()->first.size()));
    for (const auto &[bits, n] : counts) {
        table.add(BitString::from_string(bits), n);
    }
    return table;
}

std::vector<CountsDict> to_dicts(const std::vector<CountsTable> &tables) {
    std::vector<CountsDict> out;
    out.reserve(tables.size());
    for (const CountsTable &t : tables) {
        out.push_back(to_dict(t));
    }
    return out;
}

RuleSpec make_rule(int rule, const std::string &activation) {
    return RuleSpec(rule, named_activation(activation));
}

py::dict measures_dict(const NetworkMeasures &m) {
    py::dict d;
    d["clustering"] = m.clustering;
    d["path_length"] = m.path.mean;
    d["reachable_path_length"] = m.path.reachable_mean;
    d["unreachable_pairs"] = m.path.unreachable_pairs;
    d["strengths"] = m.strengths;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gqca, m) {
    m.doc() = "Goldilocks quantum cellular automata: emulation, noisy sampling, post-selection and MI networks.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const NotImplementedError &e) {
            py::set_error(PyExc_NotImplementedError, e.what());
        }
    });

    m.def("isolated_flip_sites", &isolated_flip_sites, py::arg("length"), py::arg("count"),
          "1-based sites of equally spaced isolated flips.");

    m.def(
        "evolve",
        [](const std::string &initial, int rule, const std::string &activation, int t_max) {
            return evolve(BitString::from_string(initial), make_rule(rule, activation), t_max, false).populations;
        },
        py::arg("initial"), py::arg("rule") = 6, py::arg("activation") = "H", py::arg("t_max") = 30,
        "Noiseless populations <n_i> for t = 0..t_max, one row per cycle.");

    m.def(
        "statevector",
        [](const std::string &initial, int rule, const std::string &activation, int cycles) {
            Statevector s = Statevector::basis(BitString::from_string(initial));
            for (int t = 0; t < cycles; ++t) {
                apply_cycle_in_place(s, make_rule(rule, activation));
            }
            return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(),
                                                                       static_cast<Eigen::Index>(s.dimension())));
        },
        py::arg("initial"), py::arg("rule") = 6, py::arg("activation") = "H", py::arg("cycles") = 1,
        "Amplitudes after `cycles` cycles; index bit L-1 is site 1.");

    m.def(
        "sample",
        [](const std::string &initial, int t_max, uint64_t shots, uint64_t seed, std::optional<std::string> noise,
           int trajectories) {
            const BitString init = BitString::from_string(initial);
            if (!noise) {
                return to_dicts(noiseless_counts(init, RuleSpec::goldilocks(), t_max, shots, seed));
            }
            NoisyRunOptions options;
            options.trajectories = trajectories;
            options.shots = shots;
            options.seed = seed;
            options.calibration = CalibrationParams::ideal(kDefaultParasiticPhi);
            py::gil_scoped_release release;
            return to_dicts(
                noisy_evolve(init, RuleSpec::goldilocks(), t_max, noise_model_from_json(*noise), options));
        },
        py::arg("initial"), py::arg("t_max"), py::arg("shots") = 100000, py::arg("seed") = 0,
        py::arg("noise") = py::none(), py::arg("trajectories") = 100,
        "T6/H counts per cycle. `noise` is a noise-model JSON string; None samples the exact state.");

    m.def("default_noise", [] { return noise_model_to_json(NoiseModel{}); }, "Default noise model as JSON.");

    m.def(
        "postselect",
        [](const CountsDict &counts, const std::string &reference, uint64_t min_kept) {
            const FilterResult r = filter_counts(from_dict(counts), BitString::from_string(reference), min_kept);
            py::dict d;
            d["kept"] = to_dict(r.kept);
            d["discarded"] = to_dict(r.discarded);
            d["retained_fraction"] = r.retained_fraction;
            d["insufficient"] = r.insufficient;
            return d;
        },
        py::arg("counts"), py::arg("reference"), py::arg("min_kept") = kDefaultMinKept,
        "Split counts by whether they share the reference's invariant.");

    m.def(
        "detectability",
        [](const std::string &initial) {
            const Detectability d = detectability(BitString::from_string(initial));
            return py::make_tuple(d.initial_only, d.sector);
        },
        py::arg("initial"), "Fraction of single bit flips detected: (initial-only, whole sector).");

    m.def(
        "sector_dimension", [](int length, int runs) { return sector_dimension(length, runs).count; },
        py::arg("length"), py::arg("runs"), "Number of L-bit strings with `runs` runs of 1s.");

    m.def(
        "mutual_information", [](const CountsDict &counts) { return shannon_mi(from_dict(counts)).weights; },
        py::arg("counts"), "Pairwise Shannon MI matrix in bits.");
    m.def(
        "exact_mutual_information",
        [](const Eigen::VectorXcd &amplitudes, bool von_neumann) {
            const int length = std::countr_zero(static_cast<uint64_t>(amplitudes.size()));
            Statevector s(length, std::vector<Complex>(amplitudes.data(), amplitudes.data() + amplitudes.size()));
            return von_neumann ? von_neumann_mi(s).weights : shannon_mi(s).weights;
        },
        py::arg("amplitudes"), py::arg("von_neumann") = false,
        "Exact Shannon (z-basis) or von Neumann MI matrix of a statevector.");

    m.def(
        "network_measures",
        [](const Eigen::MatrixXd &weights, double threshold) {
            return measures_dict(network_measures(MINetwork::from_matrix(weights), threshold));
        },
        py::arg("weights"), py::arg("threshold") = kDefaultEdgeThreshold,
        "Clustering, path length and node strengths of a symmetric MI matrix.");

    m.def(
        "coherence_window",
        [](const std::vector<double> &series, const std::vector<double> &baseline) -> py::object {
            const CoherenceWindow w = coherence_window(series, baseline);
            if (w.empty) {
                return py::none();
            }
            return py::make_tuple(w.t_start, w.t_end);
        },
        py::arg("series"), py::arg("baseline"), "(t_start, t_end) of the first run above baseline, or None.");

    m.def(
        "compile_stats",
        [](int length, int cycles) {
            const GateVolume v = compile_stats(RuleSpec::goldilocks(), length, cycles);
            py::dict d;
            d["two_qubit_per_cycle"] = v.two_qubit_per_cycle;
            d["single_qubit_per_cycle"] = v.single_qubit_per_cycle;
            d["cumulative_two_qubit"] = v.cumulative_two_qubit;
            d["cumulative_single_qubit"] = v.cumulative_single_qubit;
            return d;
        },
        py::arg("length"), py::arg("cycles"), "Native gate volume of compiled T6 cycles.");

    m.def(
        "config_hash", [](const std::string &text) { return config_hash(config_from_json(text)); },
        py::arg("config_json"), "Content hash of a config document.");

    m.def(
        "run",
        [](const std::string &text, const std::string &out, int workers) {
            const ExperimentConfig config = config_from_json(text);
            ExperimentResult r;
            {
                py::gil_scoped_release release;
                r = run_experiment(config, {workers, out});
            }
            py::dict d;
            d["hash"] = r.hash;
            d["clustering"] = r.mean_clustering;
            d["raw_clustering"] = r.mean_raw_clustering;
            d["retained"] = r.mean_retained;
            d["baseline_clustering"] = r.baseline_clustering;
            d["window"] = r.window.window.empty ? py::object(py::none())
                                                : py::object(py::make_tuple(r.window.window.t_start,
                                                                            r.window.window.t_end));
            return d;
        },
        py::arg("config_json"), py::arg("out") = "", py::arg("workers") = 1,
        "Full experiment from a config JSON string; writes files when `out` is set.");
}
