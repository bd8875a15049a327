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


#include "gqca/chain_select.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <set>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

std::pair<int, int> coupler_key(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

using Coord = std::pair<int, int>;

std::vector<Coord> coords_of(const DeviceMetrics &m, const std::vector<int> &path) {
    std::vector<Coord> out;
    out.reserve(path.size());
    for (int q : path) {
        out.push_back({m.qubits[static_cast<size_t>(q)].row, m.qubits[static_cast<size_t>(q)].col});
    }
    return out;
}

}  // namespace

void DeviceMetrics::validate() const {
    std::set<Coord> seen;
    for (const QubitMetrics &q : qubits) {
        if (!(q.e_r1 >= 0.0 && q.e_r1 <= 1.0)) {
            throw DomainError("readout error must lie in [0, 1]");
        }
        if (!(q.t1_us > 0.0)) {
            throw DomainError("T1 must be positive");
        }
        if (!seen.insert({q.row, q.col}).second) {
            throw DomainError("duplicate qubit coordinate");
        }
    }
    for (const auto &[key, e] : e2) {
        if (!(e >= 0.0 && e <= 1.0)) {
            throw DomainError("two-qubit error must lie in [0, 1]");
        }
    }
}

double DeviceMetrics::coupler_error(int qa, int qb) const {
    auto it = e2.find(coupler_key(qa, qb));
    return it == e2.end() ? 0.0 : it->second;
}

bool DeviceMetrics::adjacent(int qa, int qb) const {
    const QubitMetrics &a = qubits[static_cast<size_t>(qa)];
    const QubitMetrics &b = qubits[static_cast<size_t>(qb)];
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

double chain_cost(const DeviceMetrics &m, const std::vector<int> &path, const ChainCostWeights &w) {
    double cost = 0.0;
    for (size_t k = 0; k < path.size(); ++k) {
        const QubitMetrics &q = m.qubits[static_cast<size_t>(path[k])];
        cost += w.readout * q.e_r1 + w.relaxation * (w.tau_ref_us / q.t1_us);
        if (k + 1 < path.size()) {
            cost += w.two_qubit * m.coupler_error(path[k], path[k + 1]);
        }
    }
    return cost;
}

std::vector<RankedChain> enumerate_chains(const DeviceMetrics &m, int length, const ChainCostWeights &w) {
    m.validate();
    const int n = static_cast<int>(m.qubits.size());
    if (length < 1 || length > n) {
        throw InfeasibleError("chain length must lie in [1, number of qubits]");
    }
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && m.adjacent(a, b)) {
                nbrs[static_cast<size_t>(a)].push_back(b);
            }
        }
    }
    std::vector<RankedChain> out;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n), 0);
    auto dfs = [&](auto &&self, int q) -> void {
        path.push_back(q);
        used[static_cast<size_t>(q)] = 1;
        if (static_cast<int>(path.size()) == length) {
            std::vector<int> rev(path.rbegin(), path.rend());
            // Keep each undirected path once, in its smaller orientation.
            if (length == 1 || coords_of(m, path) < coords_of(m, rev)) {
                out.push_back({path, chain_cost(m, path, w)});
            }
        } else {
            for (int nb : nbrs[static_cast<size_t>(q)]) {
                if (!used[static_cast<size_t>(nb)]) {
                    self(self, nb);
                }
            }
        }
        used[static_cast<size_t>(q)] = 0;
        path.pop_back();
    };
    for (int q = 0; q < n; ++q) {
        dfs(dfs, q);
    }
    std::sort(out.begin(), out.end(), [&](const RankedChain &a, const RankedChain &b) {
        if (a.cost != b.cost) {
            return a.cost < b.cost;
        }
        return coords_of(m, a.qubits) < coords_of(m, b.qubits);
    });
    return out;
}

std::vector<RankedChain> chain_select(const DeviceMetrics &m, int length, int n_chains, const ChainCostWeights &w) {
    std::vector<RankedChain> ranked = enumerate_chains(m, length, w);
    if (ranked.empty()) {
        throw InfeasibleError("no simple path of " + std::to_string(length) + " qubits exists");
    }
    std::vector<RankedChain> picked;
    std::vector<char> taken(ranked.size(), 0);
    std::set<int> occupied;
    for (size_t k = 0; k < ranked.size() && static_cast<int>(picked.size()) < n_chains; ++k) {
        bool disjoint = std::none_of(ranked[k].qubits.begin(), ranked[k].qubits.end(),
                                     [&](int q) { return occupied.count(q) > 0; });
        if (disjoint) {
            picked.push_back(ranked[k]);
            taken[k] = 1;
            occupied.insert(ranked[k].qubits.begin(), ranked[k].qubits.end());
        }
    }
    for (size_t k = 0; k < ranked.size() && static_cast<int>(picked.size()) < n_chains; ++k) {
        if (!taken[k]) {
            picked.push_back(ranked[k]);
        }
    }
    return picked;
}

DeviceMetrics device_metrics_from_json(const std::string &text) {
    DeviceMetrics m;
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        std::map<Coord, int> index;
        for (const auto &jq : doc.at("qubits")) {
            QubitMetrics q;
            q.row = jq.at("row").get<int>();
            q.col = jq.at("col").get<int>();
            q.e_r1 = jq.value("e_r1", 0.0);
            q.t1_us = jq.value("t1_us", 15.0);
            index[{q.row, q.col}] = static_cast<int>(m.qubits.size());
            m.qubits.push_back(q);
        }
        if (doc.contains("couplers")) {
            for (const auto &jc : doc.at("couplers")) {
                Coord a{jc.at("a").at(0).get<int>(), jc.at("a").at(1).get<int>()};
                Coord b{jc.at("b").at(0).get<int>(), jc.at("b").at(1).get<int>()};
                if (!index.count(a) || !index.count(b)) {
                    throw DomainError("coupler references an unknown qubit");
                }
                m.e2[coupler_key(index[a], index[b])] = jc.at("e2").get<double>();
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed device metrics JSON: ") + e.what());
    }
    m.validate();
    return m;
}

}  // namespace gqca
