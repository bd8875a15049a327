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


#include "gqca/postselect.hpp"

#include <ostream>

#include "gqca/errors.hpp"
#include "gqca/format.hpp"
#include "gqca/invariant.hpp"

namespace gqca {

namespace {

int detected_flips(uint64_t index, int length) {
    const int reference = invariant_eigenvalue(index, length).value;
    int detected = 0;
    for (int site = 1; site <= length; ++site) {
        if (invariant_eigenvalue(index ^ site_mask(length, site), length).value != reference) {
            ++detected;
        }
    }
    return detected;
}

}  // namespace

FilterResult filter_counts(const CountsTable &counts, const BitString &reference, uint64_t min_kept) {
    if (counts.length() != reference.size()) {
        throw DomainError("reference length " + std::to_string(reference.size()) +
                          " does not match counts length " + std::to_string(counts.length()));
    }
    const int length = reference.size();
    const int target = invariant_eigenvalue(reference).value;
    FilterResult r{CountsTable(length), CountsTable(length), 0.0, false};
    for (const auto &[k, n] : counts.entries()) {
        (invariant_eigenvalue(k, length).value == target ? r.kept : r.discarded).add(k, n);
    }
    if (!counts.empty()) {
        r.retained_fraction = static_cast<double>(r.kept.total()) / static_cast<double>(counts.total());
    }
    r.insufficient = r.kept.total() < min_kept;
    return r;
}

std::vector<RetainedPoint> retained_series(const std::vector<CountsTable> &counts, const BitString &reference) {
    std::vector<RetainedPoint> series;
    for (size_t t = 0; t < counts.size(); ++t) {
        const FilterResult r = filter_counts(counts[t], reference);
        series.push_back({static_cast<int>(t), r.retained_fraction, r.kept.total()});
    }
    return series;
}

void write_retained_csv(const std::vector<RetainedPoint> &series, std::ostream &out) {
    out << "cycle,fraction,kept\n";
    for (const RetainedPoint &p : series) {
        out << p.cycle << ',' << format_double(p.fraction) << ',' << p.kept << '\n';
    }
}

Detectability detectability(const BitString &initial) {
    const int length = initial.size();
    Detectability d;
    d.initial_only = static_cast<double>(detected_flips(initial.index(), length)) / length;
    const std::vector<uint64_t> sector = sector_states(initial);
    long long detected = 0;
    for (uint64_t k : sector) {
        detected += detected_flips(k, length);
    }
    d.sector = static_cast<double>(detected) / (static_cast<double>(sector.size()) * length);
    return d;
}

}  // namespace gqca
