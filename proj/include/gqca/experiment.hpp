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


#ifndef GQCA_EXPERIMENT_HPP
#define GQCA_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gqca/config.hpp"
#include "gqca/infonet.hpp"
#include "gqca/postselect.hpp"
#include "gqca/qca.hpp"

namespace gqca {

struct CycleRecord {
    int cycle = 0;
    double retained = 0.0;
    uint64_t kept = 0;
    /// Fewer than min_kept shots survived; measures are NaN.
    bool insufficient = false;
    double clustering = 0.0;
    PathLength path;
    /// Same measures before post-selection.
    double raw_clustering = 0.0;
    PathLength raw_path;
};

struct SeedRecord {
    uint64_t seed = 0;
    std::vector<CycleRecord> cycles;
    /// Averages over the coherence window; NaN when it is empty.
    double window_clustering = 0.0;
    double window_path = 0.0;
};

/// Measures of the exact noiseless state, free of shot noise. Von Neumann
/// entries are filled for noiseless runs only.
struct ExactRecord {
    int cycle = 0;
    double clustering = 0.0;
    PathLength path;
    /// Von Neumann clustering and ||I_vN - I_Sh||_F / ||I_vN||_F; NaN when
    /// not computed or undefined.
    double vn_clustering = 0.0;
    double frobenius = 0.0;
};

struct WindowSummary {
    CoherenceWindow window;
    /// Mean and standard deviation over seeds of the window averages.
    double clustering_mean = 0.0;
    double clustering_std = 0.0;
    double path_mean = 0.0;
    double path_std = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::string hash;
    /// Exact populations[t][i-1].
    std::vector<std::vector<double>> populations;
    std::vector<SeedRecord> seeds;
    /// Seed means per cycle, NaN entries skipped.
    std::vector<double> mean_clustering;
    std::vector<double> mean_raw_clustering;
    std::vector<double> mean_path;
    std::vector<double> mean_retained;
    std::vector<double> baseline_clustering;
    std::vector<double> baseline_path;
    std::vector<ExactRecord> exact;
    WindowSummary window;
    Detectability detectability;
    /// Normalized node strengths of every post-selected network inside the
    /// window, over all seeds.
    std::vector<double> window_strengths;
};

struct RunOptions {
    /// Threads for noisy trajectories, or for sweep points in run_sweep.
    int workers = 1;
    /// Result root; nothing is written when empty.
    std::filesystem::path out;
};

/// evolve -> sample (with noise) -> post-select -> analyze -> window. With
/// an output root, writes `<out>/<hash>/` atomically: every CSV starts with
/// a "# config_hash: <hash>" line and every JSON file has a config_hash key.
ExperimentResult run_experiment(const ExperimentConfig &config, const RunOptions &options = {});

/// A base config plus axes whose values override top-level keys; points are
/// the Cartesian product in axis order.
struct SweepSpec {
    std::string base_json;
    std::filesystem::path base_dir;
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;
};
SweepSpec sweep_from_json(const std::string &text, const std::filesystem::path &base_dir = {});

struct SweepPoint {
    ExperimentConfig config;
    std::string hash;
    /// Axis name -> value as JSON text.
    std::vector<std::pair<std::string, std::string>> coordinates;
};
std::vector<SweepPoint> expand_sweep(const SweepSpec &spec);

/// Headline numbers of one point, also stored in its manifest.
struct PointSummary {
    std::string hash;
    std::vector<std::pair<std::string, std::string>> coordinates;
    int length = 0;
    int flips = 0;
    WindowSummary window;
    Detectability detectability;
    std::vector<double> mean_retained;
    std::vector<double> mean_clustering;
    std::vector<double> window_strengths;
};
PointSummary summarize(const ExperimentResult &result);

/// Runs every point over a worker pool. With `resume`, points whose
/// manifest already exists are read back instead of recomputed. Writes
/// summary.csv, retained_surface.csv and strengths_histogram.csv under
/// `<out>/sweep_<hash>/` when an output root is given.
std::vector<PointSummary> run_sweep(const SweepSpec &spec, const RunOptions &options = {}, bool resume = false);

/// Trajectory as JSON {rule, activation, L, initial, t_max, populations}.
void write_trajectory_json(const Trajectory &trajectory, std::ostream &out);

}  // namespace gqca

#endif  // GQCA_EXPERIMENT_HPP
