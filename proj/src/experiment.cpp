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


#include "gqca/experiment.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "gqca/errors.hpp"
#include "gqca/format.hpp"
#include "gqca/rng.hpp"
#include "gqca/sampler.hpp"

namespace gqca {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr uint64_t kBaselineStream = 0xba5e;

double nan_mean(const std::vector<double> &values) {
    double sum = 0.0;
    int n = 0;
    for (double v : values) {
        if (!std::isnan(v)) {
            sum += v;
            ++n;
        }
    }
    return n > 0 ? sum / n : kNaN;
}

// Sample standard deviation over non-NaN values; 0 for a single value.
double nan_std(const std::vector<double> &values) {
    const double mean = nan_mean(values);
    if (std::isnan(mean) || std::isinf(mean)) {
        return kNaN;
    }
    double ss = 0.0;
    int n = 0;
    for (double v : values) {
        if (!std::isnan(v)) {
            ss += (v - mean) * (v - mean);
            ++n;
        }
    }
    return n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
}

json number_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

double from_number_or_null(const json &j) {
    return j.is_null() ? kNaN : j.get<double>();
}

// Files of one result directory, staged under "<hash>.partial" and moved
// into place by commit().
class OutputDir {
   public:
    OutputDir(const fs::path &root, const std::string &hash) : hash_(hash) {
        if (root.empty()) {
            return;
        }
        final_ = root / hash;
        staging_ = root / (hash + ".partial");
        fs::remove_all(staging_);
        fs::create_directories(staging_);
    }

    bool enabled() const {
        return !staging_.empty();
    }

    std::ofstream csv(const std::string &relative) {
        std::ofstream out = open(relative);
        out << "# config_hash: " << hash_ << '\n';
        return out;
    }

    void write_json(const std::string &relative, json j) {
        j["config_hash"] = hash_;
        std::ofstream out = open(relative);
        out << j.dump(2) << '\n';
    }

    const std::set<std::string> &files() const {
        return files_;
    }

    void commit() {
        if (!enabled()) {
            return;
        }
        fs::remove_all(final_);
        fs::rename(staging_, final_);
    }

   private:
    std::ofstream open(const std::string &relative) {
        const fs::path p = staging_ / relative;
        fs::create_directories(p.parent_path());
        std::ofstream out(p);
        if (!out) {
            throw std::runtime_error("cannot write " + p.string());
        }
        files_.insert(relative);
        return out;
    }

    std::string hash_;
    fs::path staging_;
    fs::path final_;
    std::set<std::string> files_;
};

std::string cycle_dir(int t) {
    return "cycle_" + std::to_string(t) + "/";
}

json window_to_json(const WindowSummary &w) {
    json j;
    j["empty"] = w.window.empty;
    j["t_start"] = w.window.empty ? json(nullptr) : json(w.window.t_start);
    j["t_end"] = w.window.empty ? json(nullptr) : json(w.window.t_end);
    j["clustering_mean"] = number_or_null(w.clustering_mean);
    j["clustering_std"] = number_or_null(w.clustering_std);
    j["path_mean"] = number_or_null(w.path_mean);
    j["path_std"] = number_or_null(w.path_std);
    return j;
}

WindowSummary window_from_json(const json &j) {
    WindowSummary w;
    w.window.empty = j.at("empty").get<bool>();
    if (!w.window.empty) {
        w.window.t_start = j.at("t_start").get<int>();
        w.window.t_end = j.at("t_end").get<int>();
    }
    w.clustering_mean = from_number_or_null(j.at("clustering_mean"));
    w.clustering_std = from_number_or_null(j.at("clustering_std"));
    w.path_mean = from_number_or_null(j.at("path_mean"));
    w.path_std = from_number_or_null(j.at("path_std"));
    return w;
}

json series_to_json(const std::vector<double> &values) {
    json a = json::array();
    for (double v : values) {
        a.push_back(number_or_null(v));
    }
    return a;
}

std::vector<double> series_from_json(const json &j) {
    std::vector<double> v;
    for (const json &x : j) {
        v.push_back(from_number_or_null(x));
    }
    return v;
}

json summary_to_json(const PointSummary &s) {
    json j;
    j["L"] = s.length;
    j["flips"] = s.flips;
    j["window"] = window_to_json(s.window);
    j["detectability"] = {{"initial_only", s.detectability.initial_only}, {"sector", s.detectability.sector}};
    j["mean_retained"] = series_to_json(s.mean_retained);
    j["mean_clustering"] = series_to_json(s.mean_clustering);
    j["window_strengths"] = series_to_json(s.window_strengths);
    return j;
}

PointSummary summary_from_json(const json &j) {
    PointSummary s;
    s.length = j.at("L").get<int>();
    s.flips = j.at("flips").get<int>();
    s.window = window_from_json(j.at("window"));
    s.detectability.initial_only = j.at("detectability").at("initial_only").get<double>();
    s.detectability.sector = j.at("detectability").at("sector").get<double>();
    s.mean_retained = series_from_json(j.at("mean_retained"));
    s.mean_clustering = series_from_json(j.at("mean_clustering"));
    s.window_strengths = series_from_json(j.at("window_strengths"));
    return s;
}

void write_network(OutputDir &dir, const std::string &relative, const MINetwork &net) {
    std::ofstream out = dir.csv(relative);
    write_matrix_csv(net, out);
}

// Runs fn(i) for i in [0, n) on up to `workers` threads; rethrows the first
// failure after all threads finish.
template <typename Fn>
void parallel_for(int n, int workers, Fn fn) {
    workers = std::clamp(workers, 1, std::max(n, 1));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    ExperimentResult result;
    result.config = config;
    result.hash = config_hash(config);
    OutputDir dir(options.out, result.hash);

    const BitString init = config.initial();
    const RuleSpec rule = config.rule();
    const int cycles = config.t_max + 1;
    const double threshold = config.edge_threshold;
    const bool with_vn = config.compute_von_neumann();
    result.detectability = detectability(init);

    evolve_each(init, rule, config.t_max, [&](int t, const Statevector &state) {
        result.populations.push_back(population(state));
        const MINetwork shannon = shannon_mi(state);
        ExactRecord r{t, clustering(shannon), path_length(shannon, threshold), kNaN, kNaN};
        if (with_vn) {
            const MINetwork vn = von_neumann_mi(state);
            r.vn_clustering = clustering(vn);
            r.frobenius = frobenius_rel_distance(vn, shannon);
            if (dir.enabled()) {
                write_network(dir, cycle_dir(t) + "mi_vn.csv", vn);
            }
        }
        if (dir.enabled()) {
            write_network(dir, cycle_dir(t) + "mi_exact.csv", shannon);
        }
        result.exact.push_back(r);
    });

    for (int t = 0; t < cycles; ++t) {
        double c = kNaN, ell = kNaN;
        if (config.baseline == BaselineMode::Exact) {
            if (t == 0) {
                const Baseline b = random_baseline(init, BaselineMode::Exact, 0, 0, threshold);
                c = b.measures.clustering;
                ell = b.measures.path.mean;
            } else {
                c = result.baseline_clustering[0];
                ell = result.baseline_path[0];
            }
        } else {
            try {
                const Baseline b = random_baseline(init, BaselineMode::Sampled, config.shots,
                                                   stream_key(config.seeds[0], {kBaselineStream, uint64_t(t)}),
                                                   threshold);
                c = b.measures.clustering;
                ell = b.measures.path.mean;
            } catch (const StatisticsError &) {
            }
        }
        result.baseline_clustering.push_back(c);
        result.baseline_path.push_back(ell);
    }

    CalibrationParams calibration = CalibrationParams::ideal(config.parasitic_phi);
    CompileOptions compile;
    compile.compensate = config.compensate;
    // strengths[seed][t] for post-selected networks with enough statistics.
    std::vector<std::vector<std::vector<double>>> strengths;
    for (uint64_t seed : config.seeds) {
        std::vector<CountsTable> counts;
        if (config.noise) {
            NoisyRunOptions run;
            run.trajectories = config.trajectories;
            run.shots = config.shots;
            run.seed = seed;
            run.workers = options.workers;
            run.calibration = calibration;
            run.compile = compile;
            counts = noisy_evolve(init, rule, config.t_max, *config.noise, run);
        } else {
            counts = noiseless_counts(init, rule, config.t_max, config.shots, seed);
        }
        SeedRecord record;
        record.seed = seed;
        std::vector<std::vector<double>> seed_strengths(static_cast<size_t>(cycles));
        const std::string tag = "seed" + std::to_string(seed);
        for (int t = 0; t < cycles; ++t) {
            const CountsTable &raw = counts[static_cast<size_t>(t)];
            const FilterResult kept = filter_counts(raw, init, config.min_kept);
            CycleRecord c;
            c.cycle = t;
            c.retained = kept.retained_fraction;
            c.kept = kept.kept.total();
            c.insufficient = kept.insufficient;
            c.clustering = kNaN;
            c.path = {kNaN, kNaN, 0};
            if (!kept.insufficient) {
                const MINetwork net = shannon_mi(kept.kept);
                c.clustering = clustering(net);
                c.path = path_length(net, threshold);
                seed_strengths[static_cast<size_t>(t)] = node_strengths(net);
                if (dir.enabled()) {
                    write_network(dir, cycle_dir(t) + "mi_" + tag + ".csv", net);
                }
            }
            const MINetwork raw_net = shannon_mi(raw);
            c.raw_clustering = clustering(raw_net);
            c.raw_path = path_length(raw_net, threshold);
            if (dir.enabled() && config.write_counts) {
                std::ofstream out = dir.csv(cycle_dir(t) + "counts_" + tag + ".csv");
                write_counts_csv(raw, out);
            }
            record.cycles.push_back(c);
        }
        result.seeds.push_back(std::move(record));
        strengths.push_back(std::move(seed_strengths));
    }

    for (int t = 0; t < cycles; ++t) {
        std::vector<double> c, raw, ell, kept;
        for (const SeedRecord &s : result.seeds) {
            const CycleRecord &r = s.cycles[static_cast<size_t>(t)];
            c.push_back(r.clustering);
            raw.push_back(r.raw_clustering);
            ell.push_back(r.path.mean);
            kept.push_back(r.retained);
        }
        result.mean_clustering.push_back(nan_mean(c));
        result.mean_raw_clustering.push_back(nan_mean(raw));
        result.mean_path.push_back(nan_mean(ell));
        result.mean_retained.push_back(nan_mean(kept));
    }

    WindowSummary &w = result.window;
    w.window = coherence_window(result.mean_clustering, result.baseline_clustering);
    std::vector<double> seed_c, seed_ell;
    for (size_t s = 0; s < result.seeds.size(); ++s) {
        SeedRecord &record = result.seeds[s];
        record.window_clustering = kNaN;
        record.window_path = kNaN;
        if (!w.window.empty) {
            std::vector<double> c, ell;
            for (int t = w.window.t_start; t <= w.window.t_end; ++t) {
                c.push_back(record.cycles[static_cast<size_t>(t)].clustering);
                ell.push_back(record.cycles[static_cast<size_t>(t)].path.mean);
                const auto &g = strengths[s][static_cast<size_t>(t)];
                result.window_strengths.insert(result.window_strengths.end(), g.begin(), g.end());
            }
            record.window_clustering = nan_mean(c);
            record.window_path = nan_mean(ell);
        }
        seed_c.push_back(record.window_clustering);
        seed_ell.push_back(record.window_path);
    }
    w.clustering_mean = nan_mean(seed_c);
    w.clustering_std = nan_std(seed_c);
    w.path_mean = nan_mean(seed_ell);
    w.path_std = nan_std(seed_ell);

    if (!dir.enabled()) {
        return result;
    }
    const auto fmt = format_double;
    {
        std::ofstream out = dir.csv("populations.csv");
        out << "cycle";
        for (int i = 1; i <= config.length; ++i) {
            out << ",n_" << i;
        }
        out << '\n';
        for (size_t t = 0; t < result.populations.size(); ++t) {
            out << t;
            for (double n : result.populations[t]) {
                out << ',' << fmt(n);
            }
            out << '\n';
        }
    }
    {
        std::ofstream out = dir.csv("measures.csv");
        out << "cycle,C,ell,retained_fraction\n";
        for (int t = 0; t < cycles; ++t) {
            const auto k = static_cast<size_t>(t);
            out << t << ',' << fmt(result.mean_clustering[k]) << ',' << fmt(result.mean_path[k]) << ','
                << fmt(result.mean_retained[k]) << '\n';
        }
    }
    {
        std::ofstream out = dir.csv("measures_detail.csv");
        out << "cycle,C,C_raw,baseline_C,baseline_ell,exact_C,exact_ell,vn_C,frobenius\n";
        for (int t = 0; t < cycles; ++t) {
            const auto k = static_cast<size_t>(t);
            const ExactRecord &e = result.exact[k];
            out << t << ',' << fmt(result.mean_clustering[k]) << ',' << fmt(result.mean_raw_clustering[k]) << ','
                << fmt(result.baseline_clustering[k]) << ',' << fmt(result.baseline_path[k]) << ','
                << fmt(e.clustering) << ',' << fmt(e.path.mean) << ',' << fmt(e.vn_clustering) << ','
                << fmt(e.frobenius) << '\n';
        }
    }
    {
        std::ofstream out = dir.csv("baseline.csv");
        out << "cycle,C,ell\n";
        for (int t = 0; t < cycles; ++t) {
            out << t << ',' << fmt(result.baseline_clustering[static_cast<size_t>(t)]) << ','
                << fmt(result.baseline_path[static_cast<size_t>(t)]) << '\n';
        }
    }
    for (const SeedRecord &s : result.seeds) {
        const std::string sub = "seed_" + std::to_string(s.seed) + "/";
        std::ofstream m = dir.csv(sub + "measures.csv");
        m << "cycle,C,ell,retained_fraction\n";
        std::vector<RetainedPoint> retained;
        for (const CycleRecord &r : s.cycles) {
            m << r.cycle << ',' << fmt(r.clustering) << ',' << fmt(r.path.mean) << ',' << fmt(r.retained) << '\n';
            retained.push_back({r.cycle, r.retained, r.kept});
        }
        std::ofstream rt = dir.csv(sub + "retained.csv");
        write_retained_csv(retained, rt);
    }
    {
        const Histogram h = log_histogram(result.window_strengths);
        std::ofstream out = dir.csv("strengths_histogram.csv");
        out << "bin_lo,bin_hi,count\n";
        for (size_t b = 0; b < h.counts.size(); ++b) {
            out << fmt(h.edges[b]) << ',' << fmt(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
        }
    }
    dir.write_json("window.json", window_to_json(w));
    json manifest;
    manifest["config"] = json::parse(config_to_json(config));
    manifest["summary"] = summary_to_json(summarize(result));
    std::set<std::string> files = dir.files();
    files.insert("manifest.json");
    manifest["files"] = files;
    dir.write_json("manifest.json", manifest);
    dir.commit();
    return result;
}

PointSummary summarize(const ExperimentResult &result) {
    PointSummary s;
    s.hash = result.hash;
    s.length = result.config.length;
    s.flips = result.config.initial().popcount();
    s.window = result.window;
    s.detectability = result.detectability;
    s.mean_retained = result.mean_retained;
    s.mean_clustering = result.mean_clustering;
    s.window_strengths = result.window_strengths;
    return s;
}

SweepSpec sweep_from_json(const std::string &text, const fs::path &base_dir) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw ValidationError("$", e.what());
    }
    if (!j.is_object() || !j.contains("base") || !j.contains("axes")) {
        throw ValidationError("$", "sweep needs \"base\" and \"axes\" objects");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "base" && key != "axes") {
            throw ValidationError(key, "unknown sweep field");
        }
    }
    SweepSpec spec;
    spec.base_dir = base_dir;
    const ordered_json &base = j["base"];
    if (base.is_string()) {
        fs::path p = base.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) {
            p = base_dir / p;
        }
        std::ifstream in(p);
        if (!in) {
            throw ValidationError("base", "cannot open base config " + p.string());
        }
        std::stringstream ss;
        ss << in.rdbuf();
        spec.base_json = ss.str();
        spec.base_dir = p.parent_path();
    } else if (base.is_object()) {
        spec.base_json = base.dump();
    } else {
        throw ValidationError("base", "expected an object or a file path");
    }
    if (!j["axes"].is_object() || j["axes"].empty()) {
        throw ValidationError("axes", "needs at least one axis");
    }
    for (const auto &[key, values] : j["axes"].items()) {
        if (!values.is_array() || values.empty()) {
            throw ValidationError("axes." + key, "expected a nonempty list of values");
        }
        std::vector<std::string> texts;
        for (const auto &v : values) {
            texts.push_back(v.dump());
        }
        spec.axes.push_back({key, texts});
    }
    return spec;
}

std::vector<SweepPoint> expand_sweep(const SweepSpec &spec) {
    std::vector<SweepPoint> points;
    std::vector<size_t> index(spec.axes.size(), 0);
    while (true) {
        ordered_json j = ordered_json::parse(spec.base_json);
        SweepPoint p;
        for (size_t a = 0; a < spec.axes.size(); ++a) {
            const std::string &key = spec.axes[a].first;
            const std::string &value = spec.axes[a].second[index[a]];
            if (key == "isolated_flips") {
                j.erase("flips");
            } else if (key == "flips") {
                j.erase("isolated_flips");
            }
            j[key] = ordered_json::parse(value);
            p.coordinates.push_back({key, value});
        }
        try {
            p.config = config_from_json(j.dump(), spec.base_dir);
        } catch (const ValidationError &e) {
            std::string where;
            for (const auto &[k, v] : p.coordinates) {
                where += (where.empty() ? "" : ", ") + k + "=" + v;
            }
            throw ValidationError(e.path(), std::string(e.what()).substr(e.path().size() + 2) + " (sweep point " +
                                                where + ")");
        }
        p.hash = config_hash(p.config);
        points.push_back(std::move(p));
        size_t a = spec.axes.size();
        while (a > 0) {
            --a;
            if (++index[a] < spec.axes[a].second.size()) {
                break;
            }
            index[a] = 0;
            if (a == 0) {
                return points;
            }
        }
        if (spec.axes.empty()) {
            return points;
        }
    }
}

std::vector<PointSummary> run_sweep(const SweepSpec &spec, const RunOptions &options, bool resume) {
    const std::vector<SweepPoint> points = expand_sweep(spec);
    std::vector<PointSummary> summaries(points.size());
    // Points with equal configs share one run and one result directory.
    std::vector<int> unique;
    std::map<std::string, int> first;
    for (size_t i = 0; i < points.size(); ++i) {
        if (first.emplace(points[i].hash, static_cast<int>(i)).second) {
            unique.push_back(static_cast<int>(i));
        }
    }
    RunOptions point_options = options;
    point_options.workers = 1;
    parallel_for(static_cast<int>(unique.size()), options.workers, [&](int u) {
        const SweepPoint &p = points[static_cast<size_t>(unique[static_cast<size_t>(u)])];
        const fs::path manifest = options.out / p.hash / "manifest.json";
        PointSummary s;
        if (resume && !options.out.empty() && fs::exists(manifest)) {
            std::ifstream in(manifest);
            s = summary_from_json(json::parse(in).at("summary"));
            s.hash = p.hash;
        } else {
            s = summarize(run_experiment(p.config, point_options));
        }
        summaries[static_cast<size_t>(unique[static_cast<size_t>(u)])] = std::move(s);
    });
    for (size_t i = 0; i < points.size(); ++i) {
        summaries[i] = summaries[static_cast<size_t>(first.at(points[i].hash))];
        summaries[i].coordinates = points[i].coordinates;
    }
    if (options.out.empty()) {
        return summaries;
    }

    std::string all;
    for (const SweepPoint &p : points) {
        all += p.hash;
    }
    const std::string hash = fnv1a_hex(all);
    OutputDir dir(options.out, "sweep_" + hash);
    const auto fmt = format_double;
    std::string axis_header;
    for (const auto &[name, values] : spec.axes) {
        axis_header += "," + name;
    }
    auto axis_values = [](const PointSummary &s) {
        std::string row;
        for (const auto &[name, value] : s.coordinates) {
            // Quote JSON values that contain commas (lists, objects).
            row += "," + (value.find(',') == std::string::npos ? value : "\"" + value + "\"");
        }
        return row;
    };
    {
        std::ofstream out = dir.csv("summary.csv");
        out << "hash" << axis_header
            << ",L,flips,window_start,window_end,C_mean,C_std,ell_mean,ell_std,detect_initial,detect_sector\n";
        for (const PointSummary &s : summaries) {
            const WindowSummary &w = s.window;
            out << s.hash << axis_values(s) << ',' << s.length << ',' << s.flips << ','
                << (w.window.empty ? "" : std::to_string(w.window.t_start)) << ','
                << (w.window.empty ? "" : std::to_string(w.window.t_end)) << ',' << fmt(w.clustering_mean) << ','
                << fmt(w.clustering_std) << ',' << fmt(w.path_mean) << ',' << fmt(w.path_std) << ','
                << fmt(s.detectability.initial_only) << ',' << fmt(s.detectability.sector) << '\n';
        }
    }
    {
        std::ofstream out = dir.csv("retained_surface.csv");
        out << "hash" << axis_header << ",cycle,fraction,C\n";
        for (const PointSummary &s : summaries) {
            for (size_t t = 0; t < s.mean_retained.size(); ++t) {
                out << s.hash << axis_values(s) << ',' << t << ',' << fmt(s.mean_retained[t]) << ','
                    << fmt(s.mean_clustering[t]) << '\n';
            }
        }
    }
    {
        std::vector<double> pooled;
        for (const PointSummary &s : summaries) {
            pooled.insert(pooled.end(), s.window_strengths.begin(), s.window_strengths.end());
        }
        const Histogram h = log_histogram(pooled);
        std::ofstream out = dir.csv("strengths_histogram.csv");
        out << "bin_lo,bin_hi,count\n";
        for (size_t b = 0; b < h.counts.size(); ++b) {
            out << fmt(h.edges[b]) << ',' << fmt(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
        }
    }
    json manifest;
    json pts = json::array();
    for (const PointSummary &s : summaries) {
        pts.push_back(s.hash);
    }
    manifest["points"] = pts;
    std::set<std::string> files = dir.files();
    files.insert("manifest.json");
    manifest["files"] = files;
    dir.write_json("manifest.json", manifest);
    dir.commit();
    return summaries;
}

void write_trajectory_json(const Trajectory &trajectory, std::ostream &out) {
    json j;
    j["rule"] = trajectory.rule.rule_number();
    json m = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) {
            const Complex v = trajectory.rule.activation()(r, c);
            row.push_back({v.real(), v.imag()});
        }
        m.push_back(row);
    }
    j["activation"] = m;
    j["L"] = trajectory.initial.size();
    j["initial"] = trajectory.initial.str();
    j["t_max"] = trajectory.t_max;
    j["populations"] = trajectory.populations;
    out << j.dump() << '\n';
}

}  // namespace gqca
