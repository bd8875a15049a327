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

#ifndef GQCA_RULE_HPP
#define GQCA_RULE_HPP

#include <array>
#include <cstdint>
#include <string>

#include "gqca/statevector.hpp"

namespace gqca {

/// Activation table of a three-site rule: entry (m, n) is 1 when the center
/// site is activated for left neighbor m and right neighbor n.
///
/// Rule numbers expand as R = sum_{m,n} c_mn 2^(2m+n), i.e. the neighborhood
/// "mn" read as a two-bit number selects the bit of R.
struct ActivationTable {
    std::array<int, 4> c{};

    int operator()(int m, int n) const {
        return c[static_cast<size_t>(2 * m + n)];
    }
    int rule_number() const;
    bool operator==(const ActivationTable &) const = default;
};

/// Throws DomainError outside [0, 15].
ActivationTable rule_coefficients(int rule_number);

Mat2 identity2();
Mat2 hadamard();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
/// Haar-random 2x2 unitary drawn from a seeded generator.
Mat2 random_unitary(uint64_t seed);

/// max entry of |U^dagger U - 1|.
double unitarity_error(const MatX &u);

/// A three-site QCA rule with its activation unitary V.
class RuleSpec {
   public:
    /// Throws DomainError for an out-of-range rule or a non-unitary V.
    RuleSpec(int rule_number, const Mat2 &activation);

    /// The Goldilocks rule T6 with activation V (Hadamard by default).
    static RuleSpec goldilocks(const Mat2 &activation = hadamard());

    int rule_number() const {
        return rule_number_;
    }
    const Mat2 &activation() const {
        return activation_;
    }
    const ActivationTable &coefficients() const {
        return coefficients_;
    }
    bool activates(int left, int right) const {
        return coefficients_(left, right) != 0;
    }

   private:
    int rule_number_;
    Mat2 activation_;
    ActivationTable coefficients_;
};

/// Parses "H", "X", "Y", "Z", "I" into the named activation.
Mat2 named_activation(const std::string &name);

}  // namespace gqca

#endif  // GQCA_RULE_HPP
