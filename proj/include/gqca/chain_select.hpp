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


#ifndef GQCA_CHAIN_SELECT_HPP
#define GQCA_CHAIN_SELECT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gqca {

struct QubitMetrics {
    int row = 0;
    int col = 0;
    /// Probability of reading 0 given 1.
    double e_r1 = 0.0;
    /// Relaxation time in microseconds.
    double t1_us = 15.0;
};

/// Device error map on a square grid. Couplers join grid neighbors; a
/// coupler absent from `e2` has two-qubit error 0.
struct DeviceMetrics {
    std::vector<QubitMetrics> qubits;
    std::map<std::pair<int, int>, double> e2;

    /// Throws DomainError for rates outside [0, 1], non-positive T1 or
    /// duplicate coordinates.
    void validate() const;
    double coupler_error(int qa, int qb) const;
    bool adjacent(int qa, int qb) const;
};

struct ChainCostWeights {
    double readout = 1.0;
    double relaxation = 1.0;
    double two_qubit = 1.0;
    /// Reference circuit duration in microseconds.
    double tau_ref_us = 6.84;
};

struct RankedChain {
    /// Qubit indices into DeviceMetrics::qubits, in chain order.
    std::vector<int> qubits;
    double cost = 0.0;
};

/// cost = sum_q [w1 e_r1 + w2 tau_ref / T1] + sum_couplers w3 e2.
double chain_cost(const DeviceMetrics &metrics, const std::vector<int> &path, const ChainCostWeights &weights = {});

/// Every simple path of `length` qubits, each oriented to start at its
/// lexicographically smaller end (by grid coordinates), ranked by cost and
/// then lexicographically.
std::vector<RankedChain> enumerate_chains(const DeviceMetrics &metrics, int length,
                                          const ChainCostWeights &weights = {});

/// Up to `n_chains` chains: pairwise vertex-disjoint ones first in rank
/// order, then the best remaining overlapping ones. Throws InfeasibleError
/// when no path of `length` qubits exists.
std::vector<RankedChain> chain_select(const DeviceMetrics &metrics, int length, int n_chains,
                                      const ChainCostWeights &weights = {});

/// Parses {"qubits": [{"row", "col", "e_r1", "t1_us"}], "couplers":
/// [{"a": [row, col], "b": [row, col], "e2"}]}.
DeviceMetrics device_metrics_from_json(const std::string &text);

}  // namespace gqca

#endif  // GQCA_CHAIN_SELECT_HPP
