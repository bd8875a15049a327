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

#ifndef GQCA_QCA_HPP
#define GQCA_QCA_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "gqca/bitstring.hpp"
#include "gqca/rule.hpp"
#include "gqca/statevector.hpp"

namespace gqca {

using Mat8 = Eigen::Matrix<Complex, 8, 8>;

/// Local update on an interior site as an 8x8 operator on |left, center,
/// right>, left being the most significant bit:
/// sum_{m,n} P^(m) (x) V^{c_mn} (x) P^(n).
Mat8 neighborhood_unitary(const RuleSpec &rule);

/// Local update of one 1-based site as a dense 2^L x 2^L matrix. Neighbors
/// outside the chain are projected onto the fixed |0> boundary.
MatX local_update_unitary(const RuleSpec &rule, int site, int length);

/// Dense cycle operator U = prod_odd U_o prod_even U_e (even sites act
/// first). Throws CapacityError for length > kMaxDenseQubits.
MatX cycle_unitary_dense(const RuleSpec &rule, int length);

/// In-place local update of one site.
void apply_local_update(Statevector &state, const RuleSpec &rule, int site);

/// One cycle in place: all even sites, then all odd sites. Throws NormError
/// if the norm drifts by more than kNormTolerance; never renormalizes.
void apply_cycle_in_place(Statevector &state, const RuleSpec &rule);
Statevector apply_cycle(Statevector state, const RuleSpec &rule);

/// <n_i> for sites 1..L, computed from the exact probabilities.
std::vector<double> population(const Statevector &state);
/// Same as above for a dense probability vector over 2^L basis states.
std::vector<double> population(std::span<const double> probabilities, int length);

struct Trajectory {
    RuleSpec rule;
    BitString initial;
    int t_max = 0;
    /// states[t] for t = 0..t_max; empty when states were not retained.
    std::vector<Statevector> states;
    /// populations[t][i-1] = <n_i> after t cycles.
    std::vector<std::vector<double>> populations;
};

/// Evolves the basis state `initial` for t_max cycles. With
/// `keep_states == false` only the populations are stored.
Trajectory evolve(const BitString &initial, const RuleSpec &rule, int t_max, bool keep_states = true);

/// Streams the state after every cycle t = 0..t_max to `visit` without
/// storing it.
void evolve_each(const BitString &initial, const RuleSpec &rule, int t_max,
                 const std::function<void(int, const Statevector &)> &visit);

/// Raw amplitudes as little-endian (real, imag) float64 pairs.
void write_statevector_binary(const Statevector &state, std::ostream &out);
Statevector read_statevector_binary(int num_qubits, std::istream &in);

}  // namespace gqca

#endif  // GQCA_QCA_HPP
