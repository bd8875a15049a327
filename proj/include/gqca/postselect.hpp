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


#ifndef GQCA_POSTSELECT_HPP
#define GQCA_POSTSELECT_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gqca/counts.hpp"

namespace gqca {

/// Default kept-shot count below which observables are unreliable.
inline constexpr uint64_t kDefaultMinKept = 10;

struct FilterResult {
    CountsTable kept;
    CountsTable discarded;
    /// kept.total() / input total; 0 for empty input.
    double retained_fraction = 0.0;
    /// Fewer than the requested minimum shots survived.
    bool insufficient = false;
};

/// Splits counts into strings that share the reference's invariant
/// eigenvalue and those that do not. Throws DomainError on a length
/// mismatch; a small or empty result is flagged, not an error.
FilterResult filter_counts(const CountsTable &counts, const BitString &reference,
                           uint64_t min_kept = kDefaultMinKept);

struct RetainedPoint {
    int cycle = 0;
    double fraction = 0.0;
    uint64_t kept = 0;
};

/// Retained fraction of counts[t] for each cycle t.
std::vector<RetainedPoint> retained_series(const std::vector<CountsTable> &counts, const BitString &reference);
/// CSV "cycle,fraction,kept".
void write_retained_csv(const std::vector<RetainedPoint> &series, std::ostream &out);

struct Detectability {
    /// Fraction of the L single-bit flips of the initial string that change
    /// the invariant.
    double initial_only = 0.0;
    /// Same fraction over every string of the initial string's sector.
    double sector = 0.0;
};

/// A flip of site i conserves the invariant exactly when its two neighbors
/// (boundary included) differ; both fractions are computed by enumeration.
Detectability detectability(const BitString &initial);

}  // namespace gqca

#endif  // GQCA_POSTSELECT_HPP
