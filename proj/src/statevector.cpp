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

#include "gqca/statevector.hpp"

#include <cmath>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

void check_qubits(int n) {
    if (n < 1) {
        throw DomainError("statevector needs at least one qubit");
    }
    if (n > kMaxStatevectorQubits) {
        throw CapacityError("statevector limited to " + std::to_string(kMaxStatevectorQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

void check_site(int n, int site) {
    if (site < 1 || site > n) {
        throw DomainError("site " + std::to_string(site) + " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubits(num_qubits);
    amplitudes_.assign(dimension(), Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubits(num_qubits);
    if (amplitudes_.size() != dimension()) {
        throw DomainError("expected " + std::to_string(dimension()) + " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
    }
}

Statevector Statevector::basis(const BitString &bits) {
    Statevector s(bits.size());
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[bits.index()] = 1.0;
    return s;
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void Statevector::check_normalized(double tolerance) const {
    double n2 = norm_squared();
    if (!(std::abs(n2 - 1.0) <= tolerance)) {
        throw NormError("statevector norm drifted: |psi|^2 = " + std::to_string(n2));
    }
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (size_t k = 0; k < p.size(); ++k) {
        p[k] = std::norm(amplitudes_[k]);
    }
    return p;
}

void Statevector::apply_1q(const Mat2 &gate, int site) {
    check_site(num_qubits_, site);
    const uint64_t mask = site_mask(num_qubits_, site);
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    const uint64_t dim = dimension();
    for (uint64_t hi = 0; hi < dim; hi += 2 * mask) {
        for (uint64_t k = hi; k < hi + mask; ++k) {
            Complex a0 = amplitudes_[k];
            Complex a1 = amplitudes_[k | mask];
            amplitudes_[k] = g00 * a0 + g01 * a1;
            amplitudes_[k | mask] = g10 * a0 + g11 * a1;
        }
    }
}

void Statevector::apply_2q(const Mat4 &gate, int site_a, int site_b) {
    check_site(num_qubits_, site_a);
    check_site(num_qubits_, site_b);
    if (site_a == site_b) {
        throw DomainError("two-qubit gate needs distinct sites");
    }
    const uint64_t ma = site_mask(num_qubits_, site_a);
    const uint64_t mb = site_mask(num_qubits_, site_b);
    const uint64_t dim = dimension();
    Complex in[4];
    for (uint64_t k = 0; k < dim; ++k) {
        if (k & (ma | mb)) {
            continue;
        }
        const uint64_t idx[4] = {k, k | mb, k | ma, k | ma | mb};
        for (int r = 0; r < 4; ++r) {
            in[r] = amplitudes_[idx[r]];
        }
        for (int r = 0; r < 4; ++r) {
            amplitudes_[idx[r]] = gate(r, 0) * in[0] + gate(r, 1) * in[1] + gate(r, 2) * in[2] + gate(r, 3) * in[3];
        }
    }
}

void Statevector::scale(double factor) {
    for (Complex &a : amplitudes_) {
        a *= factor;
    }
}

double max_abs_difference(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("statevectors have different sizes");
    }
    double worst = 0.0;
    for (uint64_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace gqca
