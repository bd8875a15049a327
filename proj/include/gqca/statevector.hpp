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

#ifndef GQCA_STATEVECTOR_HPP
#define GQCA_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gqca/bitstring.hpp"

namespace gqca {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;

/// Largest chain simulated with a full statevector (2^24 amplitudes).
inline constexpr int kMaxStatevectorQubits = 24;
/// Largest chain for which dense 2^L x 2^L operators are built.
inline constexpr int kMaxDenseQubits = 12;
/// Allowed drift of the squared norm before evolution reports an error.
inline constexpr double kNormTolerance = 1e-9;

/// Pure state of an L-qubit chain, amplitude index ordered with site 1 as the
/// most significant bit.
class Statevector {
   public:
    /// |0...0> on `num_qubits` sites.
    explicit Statevector(int num_qubits);
    Statevector(int num_qubits, std::vector<Complex> amplitudes);

    static Statevector basis(const BitString &bits);

    int num_qubits() const {
        return num_qubits_;
    }
    uint64_t dimension() const {
        return uint64_t{1} << num_qubits_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](uint64_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;
    /// Throws NormError when |<psi|psi> - 1| exceeds `tolerance`.
    void check_normalized(double tolerance = kNormTolerance) const;
    std::vector<double> probabilities() const;

    /// Applies `gate` to a 1-based site.
    void apply_1q(const Mat2 &gate, int site);
    /// Applies a 4x4 `gate` whose first tensor factor acts on `site_a`.
    void apply_2q(const Mat4 &gate, int site_a, int site_b);
    /// Multiplies every amplitude by `factor`.
    void scale(double factor);

   private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// max_k |a_k - b_k|.
double max_abs_difference(const Statevector &a, const Statevector &b);

}  // namespace gqca

#endif  // GQCA_STATEVECTOR_HPP
