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


#ifndef GQCA_INFONET_HPP
#define GQCA_INFONET_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "gqca/counts.hpp"
#include "gqca/statevector.hpp"

namespace gqca {

/// Weights at or below this are non-edges for shortest paths.
inline constexpr double kDefaultEdgeThreshold = 1e-12;

/// Symmetric pairwise mutual-information matrix in bits, zero diagonal.
struct MINetwork {
    Eigen::MatrixXd weights;

    int size() const {
        return static_cast<int>(weights.rows());
    }
    /// Throws DomainError unless `w` is square, symmetric, has a zero
    /// diagonal and no entry below -1e-12; tiny negatives become 0.
    static MINetwork from_matrix(const Eigen::MatrixXd &w);
};

/// Classical mutual information of every site pair from z-basis
/// frequencies; 0 log 0 = 0. Throws StatisticsError for empty input.
MINetwork shannon_mi(const Distribution &dist);
MINetwork shannon_mi(const CountsTable &counts);
MINetwork shannon_mi(const Statevector &state);

struct DensityMatrix {
    /// 1-based sites; the first is the most significant subsystem bit.
    std::vector<int> sites;
    Eigen::MatrixXcd matrix;
};

/// Partial trace onto one or two sites.
DensityMatrix reduced_density_matrix(const Statevector &state, const std::vector<int> &sites);
/// Same marginal rebuilt from Pauli expectation values:
/// rho = 2^-k sum_mu <sigma^mu> sigma^mu.
DensityMatrix reduced_density_matrix_pauli(const Statevector &state, const std::vector<int> &sites);

/// Base-2 entropy. Eigenvalues in [-1e-10, 0) count as 0; more negative
/// ones throw DomainError.
double von_neumann_entropy(const DensityMatrix &rho);

/// S(rho_i) + S(rho_j) - S(rho_ij) for every pair.
MINetwork von_neumann_mi(const Statevector &state);

/// ||A - B||_F / ||A||_F; NaN when ||A||_F = 0.
double frobenius_rel_distance(const MINetwork &a, const MINetwork &b);

/// Tr[I^3] / sum_{i != j} [I^2]_ij; 0 when the denominator vanishes.
double clustering(const MINetwork &net);

struct PathLength {
    /// Mean shortest distance over ordered pairs; infinite if any pair is
    /// unreachable.
    double mean = 0.0;
    /// Mean over reachable ordered pairs only; NaN if none is reachable.
    double reachable_mean = 0.0;
    int unreachable_pairs = 0;
};

/// All-pairs shortest distances with edge length 1 / I_kl on edges with
/// I_kl > threshold: Dijkstra from every source.
Eigen::MatrixXd shortest_distances(const MINetwork &net, double threshold = kDefaultEdgeThreshold);
/// Same distances from Floyd-Warshall, each route re-summed from its source.
Eigen::MatrixXd floyd_warshall_distances(const MINetwork &net, double threshold = kDefaultEdgeThreshold);
PathLength path_length(const MINetwork &net, double threshold = kDefaultEdgeThreshold);

/// g_i / (L - 1) with g_i = sum_j I_ij.
std::vector<double> node_strengths(const MINetwork &net);

struct Histogram {
    std::vector<double> edges;
    std::vector<uint64_t> counts;
    uint64_t below = 0;
    uint64_t above = 0;
};

/// Logarithmic bins over [lo, hi]; defaults are 30 bins over [1e-3, 1].
Histogram log_histogram(const std::vector<double> &values, int bins = 30, double lo = 1e-3, double hi = 1.0);

struct NetworkMeasures {
    double clustering = 0.0;
    PathLength path;
    std::vector<double> strengths;
};
NetworkMeasures network_measures(const MINetwork &net, double threshold = kDefaultEdgeThreshold);

struct CoherenceWindow {
    bool empty = true;
    int t_start = 0;
    int t_end = 0;
};

/// First run of cycles where series[t] > baseline[t]; entry t belongs to
/// cycle first_cycle + t. NaN entries never count as above.
CoherenceWindow coherence_window(const std::vector<double> &series, const std::vector<double> &baseline,
                                 int first_cycle = 0);

enum class BaselineMode { Exact, Sampled };

struct Baseline {
    MINetwork network;
    NetworkMeasures measures;
    double retained_fraction = 1.0;
};

/// Measures of incoherent uniform randomness post-selected on the
/// reference's sector: exact enumeration, or `shots` uniform samples that
/// are then filtered.
Baseline random_baseline(const BitString &reference, BaselineMode mode, uint64_t shots = 100000, uint64_t seed = 0,
                         double threshold = kDefaultEdgeThreshold);

/// L x L matrix with a header row of site labels 1..L.
void write_matrix_csv(const MINetwork &net, std::ostream &out);
/// "i,j,weight" over pairs i < j with positive weight, 1-based.
void write_edge_list_csv(const MINetwork &net, std::ostream &out);
void write_graphml(const MINetwork &net, std::ostream &out);

}  // namespace gqca

#endif  // GQCA_INFONET_HPP
