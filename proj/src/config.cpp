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


#include "gqca/config.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

using json = nlohmann::json;

const std::set<std::string> kKeys = {"L",      "rule",        "activation",     "flips",    "isolated_flips",
                                     "t_max",  "shots",       "seeds",          "noise",    "trajectories",
                                     "parasitic_phi", "compensate", "baseline", "edge_threshold", "min_kept",
                                     "von_neumann",   "write_counts"};

template <typename T>
T get_field(const json &j, const std::string &path) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        if constexpr (std::is_same_v<T, bool>) {
            throw ValidationError(path, "expected a boolean");
        } else if constexpr (std::is_same_v<T, std::string>) {
            throw ValidationError(path, "expected a string");
        } else {
            throw ValidationError(path, "expected a number");
        }
    }
}

int get_int(const json &j, const std::string &path) {
    if (!j.is_number_integer()) {
        throw ValidationError(path, "expected an integer");
    }
    return j.get<int>();
}

uint64_t get_count(const json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ValidationError(path, "expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

Complex get_complex(const json &j, const std::string &path) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ValidationError(path, "expected a number or a [re, im] pair");
}

Mat2 get_matrix(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError(path, "expected a 2x2 matrix");
    }
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!j[static_cast<size_t>(r)].is_array() || j[static_cast<size_t>(r)].size() != 2) {
            throw ValidationError(row_path, "expected a row of two entries");
        }
        for (int c = 0; c < 2; ++c) {
            m(r, c) = get_complex(j[static_cast<size_t>(r)][static_cast<size_t>(c)],
                                  row_path + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

// Re-roots a noise model error under the "noise" field.
[[noreturn]] void rethrow_under_noise(const ValidationError &e) {
    throw ValidationError("noise." + e.path(), std::string(e.what()).substr(e.path().size() + 2));
}

NoiseModel noise_from_object(const json &j) {
    try {
        return noise_model_from_json(j.dump());
    } catch (const ValidationError &e) {
        rethrow_under_noise(e);
    }
}

json noise_to_object(const NoiseModel &m) {
    return json::parse(noise_model_to_json(m));
}

}  // namespace

BitString ExperimentConfig::initial() const {
    if (!flips.empty()) {
        return BitString::with_flips(length, flips);
    }
    if (isolated_flips == 0) {
        return BitString::zeros(length);
    }
    return BitString::with_flips(length, isolated_flip_sites(length, isolated_flips));
}

RuleSpec ExperimentConfig::rule() const {
    return RuleSpec(rule_number, activation);
}

bool ExperimentConfig::compute_von_neumann() const {
    if (noise) {
        return false;
    }
    return von_neumann.value_or(length <= 16);
}

void ExperimentConfig::validate() const {
    if (length < 2 || length > kMaxStatevectorQubits) {
        throw ValidationError("L", "must lie in [2, " + std::to_string(kMaxStatevectorQubits) + "]");
    }
    if (rule_number < 0 || rule_number > 15) {
        throw ValidationError("rule", "must lie in [0, 15]");
    }
    if (unitarity_error(activation) > 1e-12) {
        throw ValidationError("activation", "matrix is not unitary to 1e-12");
    }
    std::set<int> seen;
    for (size_t k = 0; k < flips.size(); ++k) {
        const std::string path = "flips[" + std::to_string(k) + "]";
        if (flips[k] < 1 || flips[k] > length) {
            throw ValidationError(path, "site outside [1, L]");
        }
        if (!seen.insert(flips[k]).second) {
            throw ValidationError(path, "duplicate site");
        }
    }
    if (flips.empty()) {
        if (isolated_flips < 0) {
            throw ValidationError("isolated_flips", "must be non-negative");
        }
        if (isolated_flips > 0) {
            try {
                isolated_flip_sites(length, isolated_flips);
            } catch (const DomainError &e) {
                throw ValidationError("isolated_flips", e.what());
            }
        }
    }
    if (t_max < 0) {
        throw ValidationError("t_max", "must be non-negative");
    }
    if (shots < 1) {
        throw ValidationError("shots", "must be at least 1");
    }
    if (seeds.empty()) {
        throw ValidationError("seeds", "needs at least one seed");
    }
    if (trajectories < 1 || static_cast<uint64_t>(trajectories) > shots) {
        throw ValidationError("trajectories", "must lie in [1, shots]");
    }
    if (!(edge_threshold >= 0.0)) {
        throw ValidationError("edge_threshold", "must be non-negative");
    }
    if (noise) {
        try {
            noise->validate();
        } catch (const ValidationError &e) {
            rethrow_under_noise(e);
        }
        const bool goldilocks_h =
            rule_number == 6 && (activation - hadamard()).cwiseAbs().maxCoeff() < 1e-12;
        if (!goldilocks_h && !noise->gate_noise_free()) {
            throw ValidationError("noise", "gate-level noise needs rule 6 with activation H");
        }
    }
}

ExperimentConfig config_from_json(const std::string &text, const std::filesystem::path &base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError("$", e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("$", "expected a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (!kKeys.count(key)) {
            throw ValidationError(key, "unknown field");
        }
    }
    ExperimentConfig c;
    if (j.contains("L")) {
        c.length = get_int(j["L"], "L");
    }
    if (j.contains("rule")) {
        c.rule_number = get_int(j["rule"], "rule");
    }
    if (j.contains("activation")) {
        const json &a = j["activation"];
        if (a.is_string()) {
            c.activation_name = a.get<std::string>();
            try {
                c.activation = named_activation(c.activation_name);
            } catch (const DomainError &e) {
                throw ValidationError("activation", e.what());
            }
        } else {
            c.activation_name.clear();
            c.activation = get_matrix(a, "activation");
        }
    }
    if (j.contains("flips") && j.contains("isolated_flips")) {
        throw ValidationError("flips", "give either flips or isolated_flips, not both");
    }
    if (j.contains("flips")) {
        if (!j["flips"].is_array() || j["flips"].empty()) {
            throw ValidationError("flips", "expected a nonempty list of sites");
        }
        for (size_t k = 0; k < j["flips"].size(); ++k) {
            c.flips.push_back(get_int(j["flips"][k], "flips[" + std::to_string(k) + "]"));
        }
    }
    if (j.contains("isolated_flips")) {
        c.isolated_flips = get_int(j["isolated_flips"], "isolated_flips");
    }
    if (j.contains("t_max")) {
        c.t_max = get_int(j["t_max"], "t_max");
    }
    if (j.contains("shots")) {
        c.shots = get_count(j["shots"], "shots");
    }
    if (j.contains("seeds")) {
        if (!j["seeds"].is_array()) {
            throw ValidationError("seeds", "expected a list of seeds");
        }
        c.seeds.clear();
        for (size_t k = 0; k < j["seeds"].size(); ++k) {
            c.seeds.push_back(get_count(j["seeds"][k], "seeds[" + std::to_string(k) + "]"));
        }
    }
    if (j.contains("noise") && !j["noise"].is_null()) {
        const json &n = j["noise"];
        if (n.is_string()) {
            std::filesystem::path p = n.get<std::string>();
            if (p.is_relative() && !base_dir.empty()) {
                p = base_dir / p;
            }
            std::ifstream in(p);
            if (!in) {
                throw ValidationError("noise", "cannot open noise file " + p.string());
            }
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                c.noise = noise_model_from_json(ss.str());
            } catch (const ValidationError &e) {
                rethrow_under_noise(e);
            }
        } else if (n.is_object()) {
            c.noise = noise_from_object(n);
        } else {
            throw ValidationError("noise", "expected null, a file path or an object");
        }
    }
    if (j.contains("trajectories")) {
        c.trajectories = get_int(j["trajectories"], "trajectories");
    }
    if (j.contains("parasitic_phi")) {
        c.parasitic_phi = get_field<double>(j["parasitic_phi"], "parasitic_phi");
    }
    if (j.contains("compensate")) {
        c.compensate = get_field<bool>(j["compensate"], "compensate");
    }
    if (j.contains("baseline")) {
        const std::string mode = get_field<std::string>(j["baseline"], "baseline");
        if (mode == "exact") {
            c.baseline = BaselineMode::Exact;
        } else if (mode == "sampled") {
            c.baseline = BaselineMode::Sampled;
        } else {
            throw ValidationError("baseline", "expected \"exact\" or \"sampled\"");
        }
    }
    if (j.contains("edge_threshold")) {
        c.edge_threshold = get_field<double>(j["edge_threshold"], "edge_threshold");
    }
    if (j.contains("min_kept")) {
        c.min_kept = get_count(j["min_kept"], "min_kept");
    }
    if (j.contains("von_neumann") && !j["von_neumann"].is_null()) {
        c.von_neumann = get_field<bool>(j["von_neumann"], "von_neumann");
    }
    if (j.contains("write_counts")) {
        c.write_counts = get_field<bool>(j["write_counts"], "write_counts");
    }
    c.validate();
    return c;
}

ExperimentConfig config_from_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("$", "cannot open config file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str(), path.parent_path());
}

std::string config_to_json(const ExperimentConfig &c) {
    json j;
    j["L"] = c.length;
    j["rule"] = c.rule_number;
    if (!c.activation_name.empty()) {
        j["activation"] = c.activation_name;
    } else {
        json m = json::array();
        for (int r = 0; r < 2; ++r) {
            json row = json::array();
            for (int col = 0; col < 2; ++col) {
                row.push_back({c.activation(r, col).real(), c.activation(r, col).imag()});
            }
            m.push_back(row);
        }
        j["activation"] = m;
    }
    if (!c.flips.empty()) {
        j["flips"] = c.flips;
    } else {
        j["isolated_flips"] = c.isolated_flips;
    }
    j["t_max"] = c.t_max;
    j["shots"] = c.shots;
    j["seeds"] = c.seeds;
    j["noise"] = c.noise ? noise_to_object(*c.noise) : json(nullptr);
    j["trajectories"] = c.trajectories;
    j["parasitic_phi"] = c.parasitic_phi;
    j["compensate"] = c.compensate;
    j["baseline"] = c.baseline == BaselineMode::Exact ? "exact" : "sampled";
    j["edge_threshold"] = c.edge_threshold;
    j["min_kept"] = c.min_kept;
    j["von_neumann"] = c.von_neumann ? json(*c.von_neumann) : json(nullptr);
    j["write_counts"] = c.write_counts;
    return j.dump(2);
}

std::string fnv1a_hex(const std::string &text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string config_hash(const ExperimentConfig &config) {
    return fnv1a_hex(config_to_json(config));
}

}  // namespace gqca
