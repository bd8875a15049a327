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


#include "gqca/infonet.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

#include "gqca/errors.hpp"
#include "gqca/format.hpp"
#include "gqca/postselect.hpp"
#include "gqca/rule.hpp"
#include "gqca/sampler.hpp"

namespace gqca {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double plogp_ratio(double pab, double pa, double pb) {
    return pab > 0.0 ? pab * std::log2(pab / (pa * pb)) : 0.0;
}

// Mutual information of two bits from P(1), P(1) and P(11).
double pair_mi(double pi, double pj, double pij) {
    const double p11 = std::max(pij, 0.0);
    const double p10 = std::max(pi - pij, 0.0);
    const double p01 = std::max(pj - pij, 0.0);
    const double p00 = std::max(1.0 - pi - pj + pij, 0.0);
    const double mi = plogp_ratio(p00, 1.0 - pi, 1.0 - pj) + plogp_ratio(p01, 1.0 - pi, pj) +
                      plogp_ratio(p10, pi, 1.0 - pj) + plogp_ratio(p11, pi, pj);
    return std::max(mi, 0.0);
}

// Accumulates single and joint |1> weights over (index, weight) pairs.
template <typename Range>
MINetwork mi_from_weights(int length, const Range &entries) {
    const auto n = static_cast<Eigen::Index>(length);
    Eigen::VectorXd one = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd both = Eigen::MatrixXd::Zero(n, n);
    double total = 0.0;
    std::vector<int> set;
    set.reserve(static_cast<size_t>(length));
    for (const auto &[k, w] : entries) {
        if (w == 0.0) {
            continue;
        }
        total += w;
        set.clear();
        for (uint64_t bits = k; bits != 0; bits &= bits - 1) {
            set.push_back(length - 1 - std::countr_zero(bits));
        }
        for (size_t a = 0; a < set.size(); ++a) {
            one(set[a]) += w;
            for (size_t b = a + 1; b < set.size(); ++b) {
                // Sites arrive in descending order; fill the upper triangle.
                both(set[b], set[a]) += w;
            }
        }
    }
    if (total <= 0.0) {
        throw StatisticsError("mutual information needs nonzero statistics");
    }
    MINetwork net{Eigen::MatrixXd::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double mi = pair_mi(one(i) / total, one(j) / total, both(i, j) / total);
            net.weights(i, j) = mi;
            net.weights(j, i) = mi;
        }
    }
    return net;
}

double entropy_of(const Eigen::VectorXd &eigenvalues) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        double lambda = eigenvalues(k);
        if (lambda < -1e-10) {
            throw DomainError("density matrix has eigenvalue " + format_double(lambda));
        }
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

void check_sites(const Statevector &state, const std::vector<int> &sites) {
    if (sites.empty() || sites.size() > 2) {
        throw DomainError("reduced density matrices cover one or two sites");
    }
    for (int s : sites) {
        if (s < 1 || s > state.num_qubits()) {
            throw DomainError("site " + std::to_string(s) + " outside the chain");
        }
    }
    if (sites.size() == 2 && sites[0] == sites[1]) {
        throw DomainError("two-site density matrix needs distinct sites");
    }
}

}  // namespace

MINetwork MINetwork::from_matrix(const Eigen::MatrixXd &w) {
    if (w.rows() != w.cols()) {
        throw DomainError("MI matrix must be square");
    }
    MINetwork net{w};
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        if (w(i, i) != 0.0) {
            throw DomainError("MI matrix must have a zero diagonal");
        }
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
            if (w(i, j) != w(j, i)) {
                throw DomainError("MI matrix must be symmetric");
            }
            if (w(i, j) < -1e-12) {
                throw DomainError("MI matrix has a negative entry");
            }
            net.weights(i, j) = std::max(w(i, j), 0.0);
        }
    }
    return net;
}

MINetwork shannon_mi(const Distribution &dist) {
    return mi_from_weights(dist.length, dist.entries);
}

MINetwork shannon_mi(const CountsTable &counts) {
    std::vector<std::pair<uint64_t, double>> weights;
    weights.reserve(counts.entries().size());
    for (const auto &[k, n] : counts.entries()) {
        weights.push_back({k, static_cast<double>(n)});
    }
    return mi_from_weights(counts.length(), weights);
}

MINetwork shannon_mi(const Statevector &state) {
    std::vector<std::pair<uint64_t, double>> weights;
    const auto amps = state.amplitudes();
    for (uint64_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        if (p > 0.0) {
            weights.push_back({k, p});
        }
    }
    return mi_from_weights(state.num_qubits(), weights);
}

DensityMatrix reduced_density_matrix(const Statevector &state, const std::vector<int> &sites) {
    check_sites(state, sites);
    const int length = state.num_qubits();
    const int k = static_cast<int>(sites.size());
    const int sub = 1 << k;
    std::vector<uint64_t> offset(static_cast<size_t>(sub), 0);
    uint64_t all = 0;
    for (int r = 0; r < sub; ++r) {
        for (int b = 0; b < k; ++b) {
            if ((r >> (k - 1 - b)) & 1) {
                offset[static_cast<size_t>(r)] |= site_mask(length, sites[static_cast<size_t>(b)]);
            }
        }
    }
    for (int s : sites) {
        all |= site_mask(length, s);
    }
    DensityMatrix rho{sites, Eigen::MatrixXcd::Zero(sub, sub)};
    const auto amps = state.amplitudes();
    Complex local[4];
    for (uint64_t base = 0; base < amps.size(); ++base) {
        if (base & all) {
            continue;
        }
        for (int r = 0; r < sub; ++r) {
            local[r] = amps[base | offset[static_cast<size_t>(r)]];
        }
        for (int r = 0; r < sub; ++r) {
            for (int c = 0; c < sub; ++c) {
                rho.matrix(r, c) += local[r] * std::conj(local[c]);
            }
        }
    }
    return rho;
}

DensityMatrix reduced_density_matrix_pauli(const Statevector &state, const std::vector<int> &sites) {
    check_sites(state, sites);
    const Mat2 paulis[4] = {identity2(), pauli_x(), pauli_y(), pauli_z()};
    const int k = static_cast<int>(sites.size());
    const int sub = 1 << k;
    DensityMatrix rho{sites, Eigen::MatrixXcd::Zero(sub, sub)};
    const int terms = k == 1 ? 4 : 16;
    for (int mu = 0; mu < terms; ++mu) {
        const int first = k == 1 ? mu : mu / 4;
        const int second = mu % 4;
        Statevector moved = state;
        moved.apply_1q(paulis[first], sites[0]);
        Eigen::MatrixXcd sigma = paulis[first];
        if (k == 2) {
            moved.apply_1q(paulis[second], sites[1]);
            Eigen::MatrixXcd kron(4, 4);
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    kron.block(2 * r, 2 * c, 2, 2) = paulis[first](r, c) * paulis[second];
                }
            }
            sigma = kron;
        }
        Complex expectation = 0.0;
        for (uint64_t i = 0; i < state.dimension(); ++i) {
            expectation += std::conj(state[i]) * moved[i];
        }
        rho.matrix += expectation.real() * sigma / static_cast<double>(sub);
    }
    return rho;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix, Eigen::EigenvaluesOnly);
    return entropy_of(solver.eigenvalues());
}

MINetwork von_neumann_mi(const Statevector &state) {
    const int length = state.num_qubits();
    std::vector<double> single(static_cast<size_t>(length));
    for (int i = 1; i <= length; ++i) {
        single[static_cast<size_t>(i - 1)] = von_neumann_entropy(reduced_density_matrix(state, {i}));
    }
    MINetwork net{Eigen::MatrixXd::Zero(length, length)};
    for (int i = 1; i <= length; ++i) {
        for (int j = i + 1; j <= length; ++j) {
            const double joint = von_neumann_entropy(reduced_density_matrix(state, {i, j}));
            const double mi =
                std::max(single[static_cast<size_t>(i - 1)] + single[static_cast<size_t>(j - 1)] - joint, 0.0);
            net.weights(i - 1, j - 1) = mi;
            net.weights(j - 1, i - 1) = mi;
        }
    }
    return net;
}

double frobenius_rel_distance(const MINetwork &a, const MINetwork &b) {
    if (a.size() != b.size()) {
        throw DomainError("networks have different sizes");
    }
    const double norm = a.weights.norm();
    if (norm == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return (a.weights - b.weights).norm() / norm;
}

double clustering(const MINetwork &net) {
    const Eigen::MatrixXd w2 = net.weights * net.weights;
    const double triangles = (w2 * net.weights).trace();
    const double paths = w2.sum() - w2.trace();
    return paths > 0.0 ? triangles / paths : 0.0;
}

Eigen::MatrixXd shortest_distances(const MINetwork &net, double threshold) {
    const Eigen::Index n = net.size();
    Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, kInf);
    std::vector<bool> done(static_cast<size_t>(n));
    for (Eigen::Index src = 0; src < n; ++src) {
        std::fill(done.begin(), done.end(), false);
        auto d = dist.row(src);
        d(src) = 0.0;
        for (Eigen::Index step = 0; step < n; ++step) {
            Eigen::Index u = -1;
            for (Eigen::Index v = 0; v < n; ++v) {
                if (!done[static_cast<size_t>(v)] && (u < 0 || d(v) < d(u))) {
                    u = v;
                }
            }
            if (std::isinf(d(u))) {
                break;
            }
            done[static_cast<size_t>(u)] = true;
            for (Eigen::Index v = 0; v < n; ++v) {
                const double w = net.weights(u, v);
                if (v != u && w > threshold && d(u) + 1.0 / w < d(v)) {
                    d(v) = d(u) + 1.0 / w;
                }
            }
        }
    }
    return dist;
}

Eigen::MatrixXd floyd_warshall_distances(const MINetwork &net, double threshold) {
    const Eigen::Index n = net.size();
    Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, kInf);
    Eigen::MatrixXi next = Eigen::MatrixXi::Constant(n, n, -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        next(i, i) = static_cast<int>(i);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && net.weights(i, j) > threshold) {
                dist(i, j) = 1.0 / net.weights(i, j);
                next(i, j) = static_cast<int>(j);
            }
        }
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (dist(i, k) + dist(k, j) < dist(i, j)) {
                    dist(i, j) = dist(i, k) + dist(k, j);
                    next(i, j) = next(i, k);
                }
            }
        }
    }
    // Re-sum each route from its source so rounding matches a forward walk.
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j || next(i, j) < 0) {
                continue;
            }
            double d = 0.0;
            for (Eigen::Index u = i; u != j;) {
                const Eigen::Index v = next(u, j);
                d += 1.0 / net.weights(u, v);
                u = v;
            }
            dist(i, j) = d;
        }
    }
    return dist;
}

PathLength path_length(const MINetwork &net, double threshold) {
    const Eigen::MatrixXd dist = shortest_distances(net, threshold);
    PathLength p;
    double sum = 0.0;
    int reachable = 0;
    for (Eigen::Index i = 0; i < dist.rows(); ++i) {
        for (Eigen::Index j = 0; j < dist.cols(); ++j) {
            if (i == j) {
                continue;
            }
            if (std::isinf(dist(i, j))) {
                ++p.unreachable_pairs;
            } else {
                sum += dist(i, j);
                ++reachable;
            }
        }
    }
    p.reachable_mean = reachable > 0 ? sum / reachable : std::numeric_limits<double>::quiet_NaN();
    p.mean = p.unreachable_pairs > 0 ? kInf : p.reachable_mean;
    return p;
}

std::vector<double> node_strengths(const MINetwork &net) {
    std::vector<double> g(static_cast<size_t>(net.size()), 0.0);
    if (net.size() < 2) {
        return g;
    }
    for (Eigen::Index i = 0; i < net.size(); ++i) {
        g[static_cast<size_t>(i)] = net.weights.row(i).sum() / static_cast<double>(net.size() - 1);
    }
    return g;
}

Histogram log_histogram(const std::vector<double> &values, int bins, double lo, double hi) {
    if (bins < 1 || !(lo > 0.0) || !(hi > lo)) {
        throw DomainError("log histogram needs bins >= 1 and 0 < lo < hi");
    }
    Histogram h;
    const double step = std::log(hi / lo) / bins;
    for (int b = 0; b <= bins; ++b) {
        h.edges.push_back(lo * std::exp(step * b));
    }
    h.edges.back() = hi;
    h.counts.assign(static_cast<size_t>(bins), 0);
    for (double v : values) {
        if (v < lo) {
            ++h.below;
        } else if (v > hi) {
            ++h.above;
        } else {
            auto b = static_cast<int>(std::upper_bound(h.edges.begin(), h.edges.end(), v) - h.edges.begin()) - 1;
            ++h.counts[static_cast<size_t>(std::min(b, bins - 1))];
        }
    }
    return h;
}

NetworkMeasures network_measures(const MINetwork &net, double threshold) {
    return {clustering(net), path_length(net, threshold), node_strengths(net)};
}

CoherenceWindow coherence_window(const std::vector<double> &series, const std::vector<double> &baseline,
                                 int first_cycle) {
    if (series.size() != baseline.size()) {
        throw DomainError("series and baseline must cover the same cycles");
    }
    CoherenceWindow w;
    for (size_t t = 0; t < series.size(); ++t) {
        const bool above = series[t] > baseline[t];
        if (above && w.empty) {
            w.empty = false;
            w.t_start = first_cycle + static_cast<int>(t);
            w.t_end = w.t_start;
        } else if (above) {
            w.t_end = first_cycle + static_cast<int>(t);
        } else if (!w.empty) {
            break;
        }
    }
    return w;
}

Baseline random_baseline(const BitString &reference, BaselineMode mode, uint64_t shots, uint64_t seed,
                         double threshold) {
    Baseline b;
    if (mode == BaselineMode::Exact) {
        const Distribution dist = exact_uniform_distribution(reference);
        b.network = shannon_mi(dist);
        b.retained_fraction = static_cast<double>(dist.entries.size()) / std::ldexp(1.0, reference.size());
    } else {
        const FilterResult r = filter_counts(uniform_random_counts(reference.size(), shots, seed), reference);
        b.network = shannon_mi(r.kept);
        b.retained_fraction = r.retained_fraction;
    }
    b.measures = network_measures(b.network, threshold);
    return b;
}

void write_matrix_csv(const MINetwork &net, std::ostream &out) {
    for (int i = 1; i <= net.size(); ++i) {
        out << i << (i == net.size() ? '\n' : ',');
    }
    for (Eigen::Index i = 0; i < net.size(); ++i) {
        for (Eigen::Index j = 0; j < net.size(); ++j) {
            out << format_double(net.weights(i, j)) << (j + 1 == net.size() ? '\n' : ',');
        }
    }
}

void write_edge_list_csv(const MINetwork &net, std::ostream &out) {
    out << "i,j,weight\n";
    for (Eigen::Index i = 0; i < net.size(); ++i) {
        for (Eigen::Index j = i + 1; j < net.size(); ++j) {
            if (net.weights(i, j) > 0.0) {
                out << i + 1 << ',' << j + 1 << ',' << format_double(net.weights(i, j)) << '\n';
            }
        }
    }
}

void write_graphml(const MINetwork &net, std::ostream &out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"mi\" edgedefault=\"undirected\">\n";
    for (int i = 1; i <= net.size(); ++i) {
        out << "    <node id=\"n" << i << "\"/>\n";
    }
    for (Eigen::Index i = 0; i < net.size(); ++i) {
        for (Eigen::Index j = i + 1; j < net.size(); ++j) {
            if (net.weights(i, j) > 0.0) {
                out << "    <edge source=\"n" << i + 1 << "\" target=\"n" << j + 1 << "\"><data key=\"weight\">"
                    << format_double(net.weights(i, j)) << "</data></edge>\n";
            }
        }
    }
    out << "  </graph>\n</graphml>\n";
}

}  // namespace gqca
