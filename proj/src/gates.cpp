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


#include "gqca/gates.hpp"

#include <cmath>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Mat4 kron2(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
        }
    }
    return out;
}

// R_Z(z_i, z_j) = e^{i(z_i+z_j)/2} Rz(z_i) (x) Rz(z_j), which is diagonal
// with entries (1, e^{i z_j}, e^{i z_i}, e^{i(z_i+z_j)}).
Mat4 rz_pair(double zi, double zj) {
    return std::exp(kI * (zi + zj) / 2.0) * kron2(rz_matrix(zi), rz_matrix(zj));
}

// Wraps a half-turn exponent into (-1, 1].
double wrap_half_turns(double v) {
    double r = v - 2.0 * std::ceil((v - 1.0) / 2.0);
    return r <= -1.0 ? r + 2.0 : r;
}

void require_params(const Gate &g, size_t n) {
    if (g.params.size() != n) {
        throw DomainError(gate_kind_name(g.kind) + " expects " + std::to_string(n) + " parameters");
    }
}

}  // namespace

Mat2 rz_matrix(double theta) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::exp(-kI * theta / 2.0);
    m(1, 1) = std::exp(kI * theta / 2.0);
    return m;
}

Mat2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Mat2 m;
    m << c, -kI * s, -kI * s, c;
    return m;
}

Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

Mat2 zpow_matrix(double t) {
    Mat2 m = Mat2::Identity();
    m(1, 1) = std::exp(kI * kPi * t);
    return m;
}

Mat2 xpow_matrix(double t) {
    return std::exp(kI * kPi * t / 2.0) * rx_matrix(kPi * t);
}

Mat2 ypow_matrix(double t) {
    return std::exp(kI * kPi * t / 2.0) * ry_matrix(kPi * t);
}

Mat2 phxz_matrix(double a, double x, double z) {
    return zpow_matrix(z) * zpow_matrix(a) * xpow_matrix(x) * zpow_matrix(-a);
}

Mat4 fsim_matrix(const FsimAngles &k) {
    const double c = std::cos(k.theta), s = std::sin(k.theta);
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(-kI * (k.gamma + k.zeta)) * c;
    m(1, 2) = -kI * std::exp(-kI * k.gamma + kI * k.chi) * s;
    m(2, 1) = -kI * std::exp(-kI * k.chi - kI * k.gamma) * s;
    m(2, 2) = std::exp(-kI * k.gamma + kI * k.zeta) * c;
    m(3, 3) = std::exp(-2.0 * kI * k.gamma - kI * k.phi);
    return m;
}

Mat4 sqrt_iswap_dagger_matrix() {
    const double h = 1.0 / std::sqrt(2.0);
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = h;
    m(1, 2) = -kI * h;
    m(2, 1) = -kI * h;
    m(2, 2) = h;
    m(3, 3) = 1.0;
    return m;
}

Mat4 cphase_matrix(double phi) {
    Mat4 m = Mat4::Identity();
    m(3, 3) = std::exp(-kI * phi);
    return m;
}

Mat4 cz_matrix() {
    Mat4 m = Mat4::Identity();
    m(3, 3) = -1.0;
    return m;
}

Mat4 ch_matrix() {
    const double h = 1.0 / std::sqrt(2.0);
    Mat4 m = Mat4::Identity();
    m(2, 2) = h;
    m(2, 3) = h;
    m(3, 2) = h;
    m(3, 3) = -h;
    return m;
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::PhXZ:
            return "PhXZ";
        case GateKind::FractionalIswap:
            return "FractionalIswap";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CPhase:
            return "CPHASE";
        case GateKind::CH:
            return "CH";
        case GateKind::PauliX:
            return "X";
        case GateKind::PauliY:
            return "Y";
        case GateKind::PauliZ:
            return "Z";
        case GateKind::YPow:
            return "YPow";
        case GateKind::Rx:
            return "Rx";
        case GateKind::Rz:
            return "Rz";
    }
    throw DomainError("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string &name) {
    for (GateKind k : {GateKind::PhXZ, GateKind::FractionalIswap, GateKind::CZ, GateKind::CPhase, GateKind::CH,
                       GateKind::PauliX, GateKind::PauliY, GateKind::PauliZ, GateKind::YPow, GateKind::Rx,
                       GateKind::Rz}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown gate kind '" + name + "'");
}

int Gate::arity() const {
    switch (kind) {
        case GateKind::FractionalIswap:
        case GateKind::CZ:
        case GateKind::CPhase:
        case GateKind::CH:
            return 2;
        default:
            return 1;
    }
}

MatX Gate::matrix() const {
    switch (kind) {
        case GateKind::PhXZ:
            require_params(*this, 3);
            return phxz_matrix(params[0], params[1], params[2]);
        case GateKind::Rz:
            require_params(*this, 1);
            return rz_matrix(params[0]);
        case GateKind::Rx:
            require_params(*this, 1);
            return rx_matrix(params[0]);
        case GateKind::YPow:
            require_params(*this, 1);
            return ypow_matrix(params[0]);
        case GateKind::PauliX:
            return xpow_matrix(1.0);
        case GateKind::PauliY:
            return ypow_matrix(1.0);
        case GateKind::PauliZ:
            return zpow_matrix(1.0);
        case GateKind::CZ:
            return cz_matrix();
        case GateKind::CPhase:
            require_params(*this, 1);
            return cphase_matrix(params[0]);
        case GateKind::CH:
            return ch_matrix();
        case GateKind::FractionalIswap: {
            require_params(*this, 9);
            const FsimAngles k{params[0], params[1], params[2], params[3], params[4]};
            return rz_pair(params[7], params[8]) * fsim_matrix(k) * rz_pair(params[5], params[6]);
        }
    }
    throw DomainError("unknown gate kind");
}

Gate phxz_gate(int site, double a, double x, double z) {
    return Gate{GateKind::PhXZ, {site, 0}, {a, x, z}, false};
}

Gate rz_gate(int site, double theta) {
    return Gate{GateKind::Rz, {site, 0}, {theta}, false};
}

Gate rx_gate(int site, double theta) {
    return Gate{GateKind::Rx, {site, 0}, {theta}, false};
}

Gate ypow_gate(int site, double t) {
    return Gate{GateKind::YPow, {site, 0}, {t}, false};
}

Gate pauli_gate(GateKind kind, int site) {
    if (kind != GateKind::PauliX && kind != GateKind::PauliY && kind != GateKind::PauliZ) {
        throw DomainError("not a Pauli gate kind");
    }
    return Gate{kind, {site, 0}, {}, false};
}

Gate cz_gate(int a, int b) {
    return Gate{GateKind::CZ, {a, b}, {}, false};
}

Gate cphase_gate(int a, int b, double phi) {
    return Gate{GateKind::CPhase, {a, b}, {phi}, false};
}

Gate ch_gate(int control, int target) {
    return Gate{GateKind::CH, {control, target}, {}, false};
}

Gate fsim_gate(int a, int b, const FsimAngles &k) {
    return Gate{GateKind::FractionalIswap, {a, b}, {k.theta, k.zeta, k.chi, k.gamma, k.phi, 0, 0, 0, 0}, false};
}

PhXZParams phxz_from_matrix(const Mat2 &u) {
    constexpr double kEdge = 1e-12;
    const double m00 = std::abs(u(0, 0)), m10 = std::abs(u(1, 0));
    PhXZParams p;
    if (m10 < kEdge * (m00 + m10)) {
        p.z = wrap_half_turns(std::arg(u(1, 1) / u(0, 0)) / kPi);
        return p;
    }
    if (m00 < kEdge * (m00 + m10)) {
        p.x = 1.0;
        p.a = std::arg(u(1, 0) / u(0, 1)) / (2.0 * kPi);
        return p;
    }
    p.x = 2.0 * std::atan2(m10, m00) / kPi;
    p.z = wrap_half_turns(std::arg(u(1, 1) / u(0, 0)) / kPi);
    const double a_plus_z = std::arg(kI * u(1, 0) / u(0, 0)) / kPi;
    p.a = wrap_half_turns(a_plus_z - p.z);
    return p;
}

double phase_aligned_distance(const MatX &a, const MatX &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("matrix shapes differ");
    }
    Complex overlap = (b.adjoint() * a).trace();
    Complex phase(1.0, 0.0);
    if (std::abs(overlap) > 1e-300) {
        phase = overlap / std::abs(overlap);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace gqca
