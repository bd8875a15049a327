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


#ifndef GQCA_COUNTS_HPP
#define GQCA_COUNTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gqca/bitstring.hpp"

namespace gqca {

/// Shot counts of measured L-bit strings, keyed by basis index.
class CountsTable {
   public:
    CountsTable() = default;
    explicit CountsTable(int length);

    int length() const {
        return length_;
    }
    uint64_t total() const {
        return total_;
    }
    bool empty() const {
        return total_ == 0;
    }
    const std::map<uint64_t, uint64_t> &entries() const {
        return counts_;
    }
    uint64_t count(uint64_t index) const;
    uint64_t count(const BitString &bits) const;

    void add(uint64_t index, uint64_t n = 1);
    void add(const BitString &bits, uint64_t n = 1);
    /// Associative, commutative union of shot counts.
    void merge(const CountsTable &other);

    bool operator==(const CountsTable &) const = default;

   private:
    int length_ = 0;
    uint64_t total_ = 0;
    std::map<uint64_t, uint64_t> counts_;
};

/// A normalized distribution over basis indices (sparse).
struct Distribution {
    int length = 0;
    std::vector<std::pair<uint64_t, double>> entries;
};

/// P_z = N_z / N_c. Throws StatisticsError for an empty table.
Distribution to_distribution(const CountsTable &counts);
Distribution dense_distribution(const std::vector<double> &probabilities, int length);

/// <n_i> = (1 - sum_z P_z (-1)^{z_i}) / 2 for sites 1..L. Throws
/// StatisticsError for an empty table.
std::vector<double> population(const CountsTable &counts);
std::vector<double> population(const Distribution &dist);

/// CSV with header "bitstring,count", rows in ascending basis order.
void write_counts_csv(const CountsTable &counts, std::ostream &out);
CountsTable read_counts_csv(std::istream &in);

}  // namespace gqca

#endif  // GQCA_COUNTS_HPP
