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


#include "gqca/counts.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {

CountsTable::CountsTable(int length) : length_(length) {
    if (length < 1 || length > kMaxBitStringLength) {
        throw DomainError("counts table length must lie in [1, " + std::to_string(kMaxBitStringLength) + "]");
    }
}

uint64_t CountsTable::count(uint64_t index) const {
    auto it = counts_.find(index);
    return it == counts_.end() ? 0 : it->second;
}

uint64_t CountsTable::count(const BitString &bits) const {
    if (bits.size() != length_) {
        throw DomainError("bitstring length does not match the counts table");
    }
    return count(bits.index());
}

void CountsTable::add(uint64_t index, uint64_t n) {
    if (length_ < 64 && (index >> length_) != 0) {
        throw DomainError("basis index exceeds the table's bit length");
    }
    if (n == 0) {
        return;
    }
    counts_[index] += n;
    total_ += n;
}

void CountsTable::add(const BitString &bits, uint64_t n) {
    if (bits.size() != length_) {
        throw DomainError("bitstring length does not match the counts table");
    }
    add(bits.index(), n);
}

void CountsTable::merge(const CountsTable &other) {
    if (other.length_ != length_) {
        throw DomainError("cannot merge counts of different lengths");
    }
    for (const auto &[k, n] : other.counts_) {
        add(k, n);
    }
}

Distribution to_distribution(const CountsTable &counts) {
    if (counts.empty()) {
        throw StatisticsError("empty counts table");
    }
    Distribution d;
    d.length = counts.length();
    const double n = static_cast<double>(counts.total());
    for (const auto &[k, c] : counts.entries()) {
        d.entries.push_back({k, static_cast<double>(c) / n});
    }
    return d;
}

Distribution dense_distribution(const std::vector<double> &probabilities, int length) {
    if (probabilities.size() != (size_t{1} << length)) {
        throw DomainError("probability vector size does not match 2^L");
    }
    Distribution d;
    d.length = length;
    for (uint64_t k = 0; k < probabilities.size(); ++k) {
        if (probabilities[k] > 0.0) {
            d.entries.push_back({k, probabilities[k]});
        }
    }
    return d;
}

std::vector<double> population(const Distribution &dist) {
    if (dist.entries.empty()) {
        throw StatisticsError("empty distribution");
    }
    std::vector<double> parity_sum(static_cast<size_t>(dist.length), 0.0);
    for (const auto &[k, p] : dist.entries) {
        for (int site = 1; site <= dist.length; ++site) {
            parity_sum[static_cast<size_t>(site - 1)] += site_bit(k, dist.length, site) ? -p : p;
        }
    }
    std::vector<double> pop(parity_sum.size());
    for (size_t i = 0; i < pop.size(); ++i) {
        pop[i] = (1.0 - parity_sum[i]) / 2.0;
    }
    return pop;
}

std::vector<double> population(const CountsTable &counts) {
    return population(to_distribution(counts));
}

void write_counts_csv(const CountsTable &counts, std::ostream &out) {
    out << "bitstring,count\n";
    for (const auto &[k, n] : counts.entries()) {
        out << BitString(counts.length(), k).str() << ',' << n << '\n';
    }
}

CountsTable read_counts_csv(std::istream &in) {
    std::string line;
    bool header = false;
    CountsTable table;
    bool sized = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header) {
            if (line != "bitstring,count") {
                throw DomainError("counts CSV must start with header 'bitstring,count'");
            }
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DomainError("malformed counts row: " + line);
        }
        BitString bits = BitString::from_string(line.substr(0, comma));
        if (!sized) {
            table = CountsTable(bits.size());
            sized = true;
        }
        uint64_t n = 0;
        try {
            n = std::stoull(line.substr(comma + 1));
        } catch (const std::exception &) {
            throw DomainError("malformed count in row: " + line);
        }
        table.add(bits, n);
    }
    if (!header) {
        throw DomainError("counts CSV is missing its header");
    }
    return table;
}

}  // namespace gqca
