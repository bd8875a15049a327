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


#ifndef GQCA_CONFIG_HPP
#define GQCA_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gqca/bitstring.hpp"
#include "gqca/compiler.hpp"
#include "gqca/infonet.hpp"
#include "gqca/rule.hpp"
#include "gqca/sampler.hpp"

namespace gqca {

/// One experiment. Every field has a default; JSON keys are the field names
/// below.
struct ExperimentConfig {
    int length = 11;
    int rule_number = 6;
    /// "H", "X", "Y", "Z", "I" or an explicit matrix.
    std::string activation_name = "H";
    Mat2 activation = hadamard();
    /// Exactly one of `flips` (1-based sites) or `isolated_flips` is used.
    std::vector<int> flips;
    int isolated_flips = 1;
    int t_max = 19;
    uint64_t shots = 100000;
    std::vector<uint64_t> seeds{0, 1, 2, 3};
    /// Absent for noiseless runs.
    std::optional<NoiseModel> noise;
    int trajectories = 100;
    double parasitic_phi = kDefaultParasiticPhi;
    bool compensate = true;
    BaselineMode baseline = BaselineMode::Exact;
    double edge_threshold = kDefaultEdgeThreshold;
    uint64_t min_kept = 10;
    /// Exact von Neumann MI per cycle for noiseless runs; off above L = 16
    /// unless set.
    std::optional<bool> von_neumann;
    bool write_counts = true;

    BitString initial() const;
    RuleSpec rule() const;
    bool compute_von_neumann() const;
    /// Throws ValidationError with the offending field path.
    void validate() const;
};

/// Parses a config document. Unknown keys and type errors throw
/// ValidationError naming the field path. A string "noise" entry is read
/// as a file path relative to `base_dir`.
ExperimentConfig config_from_json(const std::string &text, const std::filesystem::path &base_dir = {});
ExperimentConfig config_from_file(const std::filesystem::path &path);

/// Canonical JSON (sorted keys, defaults filled, noise inlined).
std::string config_to_json(const ExperimentConfig &config);

/// FNV-1a 64-bit hash of the canonical JSON as 16 hex digits.
std::string config_hash(const ExperimentConfig &config);
std::string fnv1a_hex(const std::string &text);

}  // namespace gqca

#endif  // GQCA_CONFIG_HPP
