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


#ifndef GQCA_INVARIANT_HPP
#define GQCA_INVARIANT_HPP

#include <cstdint>
#include <vector>

#include "gqca/bitstring.hpp"
#include "gqca/rule.hpp"

namespace gqca {

/// Eigenvalue of O = sum_{i=0}^{L} Z_i Z_{i+1} on a basis string, with the
/// chain padded by a fixed 0 at sites 0 and L+1.
struct InvariantValue {
    int value = 0;
    int domain_walls = 0;
    bool operator==(const InvariantValue &) const = default;
};

/// Number of unequal adjacent pairs in the zero-padded chain.
int domain_walls(uint64_t index, int length);
InvariantValue invariant_eigenvalue(const BitString &bits);
InvariantValue invariant_eigenvalue(uint64_t index, int length);

/// Diagonal of O over all 2^L basis states.
std::vector<int> invariant_diagonal(int length);

/// Frobenius norm of [O, U] with U the cycle unitary, built one column at a
/// time from basis states. Throws CapacityError above kMaxDenseQubits.
double commutator_norm(const RuleSpec &rule, int length);

struct SectorDimension {
    uint64_t count = 0;
    /// count / 2^L.
    double relative = 0.0;
};

/// Number of L-bit strings with 2k padded domain walls, i.e. with k runs of
/// 1s. Each such string is fixed by choosing 2k of the L+1 bonds, so the
/// count is binom(L+1, 2k).
SectorDimension sector_dimension(int length, int run_count);

/// All basis indices sharing the invariant of `reference`, ascending.
std::vector<uint64_t> sector_states(const BitString &reference);

/// Least-squares fit of log(y) = log(amplitude) - x / decay_length.
struct ExponentialFit {
    double amplitude = 0.0;
    double decay_length = 0.0;
    /// Coefficient of determination of the log-linear fit.
    double r_squared = 0.0;
};
ExponentialFit fit_exponential(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace gqca

#endif  // GQCA_INVARIANT_HPP
