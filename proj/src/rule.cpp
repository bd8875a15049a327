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

#include "gqca/rule.hpp"

#include <cmath>
#include <random>

#include "gqca/errors.hpp"

namespace gqca {

int ActivationTable::rule_number() const {
    int r = 0;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            r += (*this)(m, n) << (2 * m + n);
        }
    }
    return r;
}

ActivationTable rule_coefficients(int rule_number) {
    if (rule_number < 0 || rule_number > 15) {
        throw DomainError("rule number must be in [0, 15], got " + std::to_string(rule_number));
    }
    ActivationTable t;
    for (int bit = 0; bit < 4; ++bit) {
        t.c[static_cast<size_t>(bit)] = (rule_number >> bit) & 1;
    }
    return t;
}

Mat2 identity2() {
    return Mat2::Identity();
}

Mat2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Mat2 m;
    m << h, h, h, -h;
    return m;
}

Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 random_unitary(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat2 g;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            g(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    // QR of a Ginibre matrix, with R's diagonal phases moved into Q, is Haar.
    Eigen::HouseholderQR<Mat2> qr(g);
    Mat2 q = qr.householderQ();
    Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 2; ++c) {
        Complex d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

double unitarity_error(const MatX &u) {
    MatX d = u.adjoint() * u - MatX::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

RuleSpec::RuleSpec(int rule_number, const Mat2 &activation)
    : rule_number_(rule_number), activation_(activation), coefficients_(rule_coefficients(rule_number)) {
    if (unitarity_error(activation) > 1e-12) {
        throw DomainError("activation matrix is not unitary to 1e-12");
    }
}

RuleSpec RuleSpec::goldilocks(const Mat2 &activation) {
    return RuleSpec(6, activation);
}

Mat2 named_activation(const std::string &name) {
    if (name == "H") {
        return hadamard();
    }
    if (name == "X") {
        return pauli_x();
    }
    if (name == "Y") {
        return pauli_y();
    }
    if (name == "Z") {
        return pauli_z();
    }
    if (name == "I") {
        return identity2();
    }
    throw DomainError("unknown activation '" + name + "' (expected H, X, Y, Z or I)");
}

}  // namespace gqca
