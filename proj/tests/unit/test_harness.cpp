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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqca/config.hpp"
#include "gqca/errors.hpp"
#include "gqca/experiment.hpp"

namespace gqca {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string &name) {
    const fs::path p = fs::temp_directory_path() / ("gqca_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string expect_validation_path(const std::string &text) {
    try {
        config_from_json(text);
    } catch (const ValidationError &e) {
        return e.path();
    }
    ADD_FAILURE() << "no validation error for " << text;
    return "";
}

TEST(Config, DefaultsMirrorThePaper) {
    const ExperimentConfig c = config_from_json("{}");
    EXPECT_EQ(c.shots, 100000u);
    EXPECT_EQ(c.seeds.size(), 4u);
    EXPECT_EQ(c.t_max, 19);
    EXPECT_EQ(c.initial().str(), "00000100000");
    EXPECT_FALSE(c.noise.has_value());
}

TEST(Config, ErrorsNameTheField) {
    EXPECT_EQ(expect_validation_path(R"({"flips": [2, 40]})"), "flips[1]");
    EXPECT_EQ(expect_validation_path(R"({"flips": [2, 2]})"), "flips[1]");
    EXPECT_EQ(expect_validation_path(R"({"noise": {"e2": 2}})"), "noise.e2");
    EXPECT_EQ(expect_validation_path(R"({"colour": 1})"), "colour");
    EXPECT_EQ(expect_validation_path(R"({"t_max": -1})"), "t_max");
    EXPECT_EQ(expect_validation_path(R"({"activation": [[1, 0], [0, 2]]})"), "activation");
    EXPECT_EQ(expect_validation_path(R"({"activation": [[1, 0], [0]]})"), "activation[1]");
    EXPECT_EQ(expect_validation_path(R"({"L": "big"})"), "L");
    EXPECT_EQ(expect_validation_path(R"({"isolated_flips": 9, "L": 9})"), "isolated_flips");
    EXPECT_EQ(expect_validation_path(R"({"rule": 5, "noise": {}})"), "noise");
    EXPECT_EQ(expect_validation_path(R"({"flips": [1], "isolated_flips": 1})"), "flips");
}

TEST(Config, CanonicalJsonRoundTripsWithStableHash) {
    const ExperimentConfig c = config_from_json(
        R"({"L": 7, "flips": [2, 5], "activation": [[0, 1], [1, 0]], "seeds": [3],
            "noise": {"e1": 0, "e2": 0, "T1_us": null}})");
    EXPECT_EQ(c.initial().str(), "0100100");
    const std::string canon = config_to_json(c);
    const ExperimentConfig back = config_from_json(canon);
    EXPECT_EQ(config_to_json(back), canon);
    EXPECT_EQ(config_hash(back), config_hash(c));
    EXPECT_EQ(config_hash(c).size(), 16u);
    EXPECT_NE(config_hash(config_from_json(R"({"L": 7})")), config_hash(config_from_json(R"({"L": 9})")));
    // FNV-1a 64 reference values.
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Config, NoiseFileResolvesRelativeToConfig) {
    const fs::path dir = scratch("noise_file");
    std::ofstream(dir / "noise.json") << R"({"e2": 0.03})";
    std::ofstream(dir / "exp.json") << R"({"L": 5, "noise": "noise.json"})";
    const ExperimentConfig c = config_from_file(dir / "exp.json");
    ASSERT_TRUE(c.noise.has_value());
    EXPECT_EQ(c.noise->e2, 0.03);
    EXPECT_EQ(c.noise->e_r1, 0.07);
}

ExperimentConfig small_config(bool noisy) {
    std::string text = R"({"L": 5, "t_max": 4, "shots": 3000, "seeds": [0, 1], "trajectories": 20)";
    text += noisy ? R"(, "noise": {}})" : "}";
    return config_from_json(text);
}

TEST(RunExperiment, NoiselessRunKeepsEveryShotAndChangesNoMeasure) {
    const ExperimentResult r = run_experiment(small_config(false));
    ASSERT_EQ(r.mean_retained.size(), 5u);
    for (const SeedRecord &s : r.seeds) {
        for (const CycleRecord &c : s.cycles) {
            EXPECT_EQ(c.retained, 1.0);
            EXPECT_EQ(c.clustering, c.raw_clustering);
        }
    }
    ASSERT_EQ(r.exact.size(), 5u);
    EXPECT_FALSE(std::isnan(r.exact[3].vn_clustering));
    EXPECT_EQ(r.populations[0][2], 1.0);
}

TEST(RunExperiment, WritesHashedDeterministicOutputs) {
    const fs::path out = scratch("outputs");
    const ExperimentConfig config = small_config(true);
    const ExperimentResult first = run_experiment(config, {1, out});
    const fs::path dir = out / first.hash;
    ASSERT_TRUE(fs::exists(dir / "manifest.json"));
    EXPECT_FALSE(fs::exists(out / (first.hash + ".partial")));
    std::map<std::string, std::string> contents;
    for (const auto &entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const std::string text = slurp(entry.path());
        const std::string rel = fs::relative(entry.path(), dir).string();
        contents[rel] = text;
        if (entry.path().extension() == ".csv") {
            EXPECT_EQ(text.rfind("# config_hash: " + first.hash + "\n", 0), 0u) << rel;
        } else {
            EXPECT_NE(text.find("\"config_hash\": \"" + first.hash + "\""), std::string::npos) << rel;
        }
    }
    EXPECT_TRUE(contents.count("cycle_3/counts_seed1.csv"));
    EXPECT_TRUE(contents.count("seed_0/retained.csv"));
    EXPECT_TRUE(contents.count("populations.csv"));
    run_experiment(config, {1, out});
    for (const auto &[rel, text] : contents) {
        EXPECT_EQ(slurp(dir / rel), text) << rel;
    }
}

TEST(RunExperiment, NoisyRetainedFractionFalls) {
    const ExperimentResult r = run_experiment(small_config(true));
    EXPECT_LT(r.mean_retained.back(), r.mean_retained[1]);
    EXPECT_LT(r.mean_retained.back(), 1.0);
}

TEST(Sweep, ExpandsAxesInOrderAndAggregates) {
    const fs::path out = scratch("sweep");
    const SweepSpec spec = sweep_from_json(R"({
        "base": {"t_max": 3, "shots": 2000, "seeds": [0], "flips": [1]},
        "axes": {"L": [5, 7], "isolated_flips": [1, 2]}
    })");
    const std::vector<SweepPoint> points = expand_sweep(spec);
    ASSERT_EQ(points.size(), 4u);
    EXPECT_EQ(points[1].config.length, 5);
    EXPECT_EQ(points[1].config.isolated_flips, 2);
    EXPECT_EQ(points[2].config.length, 7);
    const std::vector<PointSummary> run = run_sweep(spec, {2, out});
    for (const PointSummary &s : run) {
        for (double f : s.mean_retained) {
            EXPECT_EQ(f, 1.0);
        }
    }
    EXPECT_GT(run[3].detectability.initial_only, 0.0);
    const std::vector<PointSummary> resumed = run_sweep(spec, {1, out}, true);
    for (size_t i = 0; i < run.size(); ++i) {
        EXPECT_EQ(resumed[i].mean_clustering, run[i].mean_clustering);
        EXPECT_EQ(resumed[i].hash, run[i].hash);
    }
    bool found = false;
    for (const auto &entry : fs::directory_iterator(out)) {
        if (entry.path().filename().string().rfind("sweep_", 0) == 0) {
            found = true;
            const std::string summary = slurp(entry.path() / "summary.csv");
            EXPECT_NE(summary.find("hash,L,isolated_flips,L,flips"), std::string::npos);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(sweep_from_json(R"({"base": {}, "axes": {"L": []}})"), ValidationError);
    EXPECT_THROW(expand_sweep(sweep_from_json(R"({"base": {}, "axes": {"L": [1]}})")), ValidationError);
}

TEST(TrajectoryJson, HasDocumentedFields) {
    const Trajectory t = evolve(BitString::from_string("010"), RuleSpec::goldilocks(), 1, false);
    std::ostringstream out;
    write_trajectory_json(t, out);
    const std::string s = out.str();
    for (const char *key : {"\"rule\":6", "\"L\":3", "\"initial\":\"010\"", "\"t_max\":1", "\"populations\"",
                            "\"activation\""}) {
        EXPECT_NE(s.find(key), std::string::npos) << key;
    }
}

}  // namespace
}  // namespace gqca
