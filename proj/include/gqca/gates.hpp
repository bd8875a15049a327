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


#ifndef GQCA_GATES_HPP
#define GQCA_GATES_HPP

#include <array>
#include <numbers>
#include <string>
#include <vector>

#include "gqca/statevector.hpp"

namespace gqca {

/// Rotation matrices with the physics convention R_P(t) = exp(-i t P / 2).
Mat2 rz_matrix(double theta);
Mat2 rx_matrix(double theta);
Mat2 ry_matrix(double theta);

/// Half-turn powers: Z^t = diag(1, e^{i pi t}), X^t = e^{i pi t/2} Rx(pi t),
/// Y^t = e^{i pi t/2} Ry(pi t).
Mat2 zpow_matrix(double t);
Mat2 xpow_matrix(double t);
Mat2 ypow_matrix(double t);

/// PhXZ(a, x, z) = Z^z Z^a X^x Z^{-a}.
Mat2 phxz_matrix(double a, double x, double z);

/// Angles of the excitation-number-conserving two-qubit family.
struct FsimAngles {
    double theta = std::numbers::pi / 4;
    double zeta = 0.0;
    double chi = 0.0;
    double gamma = 0.0;
    double phi = 0.0;
};

/// K(theta, zeta, chi, gamma, phi) on |q_i q_j>, q_i the first factor.
Mat4 fsim_matrix(const FsimAngles &angles);
Mat4 sqrt_iswap_dagger_matrix();
/// diag(1, 1, 1, e^{-i phi}).
Mat4 cphase_matrix(double phi);
Mat4 cz_matrix();
/// Hadamard on the second factor controlled by the first.
Mat4 ch_matrix();

enum class GateKind { PhXZ, FractionalIswap, CZ, CPhase, CH, PauliX, PauliY, PauliZ, YPow, Rx, Rz };

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string &name);

/// A native or intermediate gate on one or two 1-based sites.
///
/// Parameters by kind: PhXZ {a, x, z}; FractionalIswap {theta, zeta, chi,
/// gamma, phi, pre_i, pre_j, post_i, post_j}, where the last four are the
/// z-rotation correction executed with the gate; CPhase {phi}; YPow {t};
/// Rx and Rz {angle}. Echo gates are inserted identity pairs that gate
/// merging leaves in place.
struct Gate {
    GateKind kind = GateKind::PhXZ;
    std::array<int, 2> targets{0, 0};
    std::vector<double> params;
    bool echo = false;

    int arity() const;
    /// 2x2 or 4x4; for two-qubit gates targets[0] is the first factor.
    MatX matrix() const;
    bool operator==(const Gate &) const = default;
};

Gate phxz_gate(int site, double a, double x, double z);
Gate rz_gate(int site, double theta);
Gate rx_gate(int site, double theta);
Gate ypow_gate(int site, double t);
Gate pauli_gate(GateKind kind, int site);
Gate cz_gate(int a, int b);
Gate cphase_gate(int a, int b, double phi);
Gate ch_gate(int control, int target);
Gate fsim_gate(int a, int b, const FsimAngles &angles);

struct PhXZParams {
    double a = 0.0;
    double x = 0.0;
    double z = 0.0;
};

/// Canonical PhXZ representative of a 2x2 unitary up to global phase:
/// x in [0, 1], a and z in (-1, 1], a = 0 when x = 0 and z = 0 when x = 1.
PhXZParams phxz_from_matrix(const Mat2 &u);

/// Max entry deviation of a from b after aligning b's global phase on a's
/// largest-magnitude entry.
double phase_aligned_distance(const MatX &a, const MatX &b);

}  // namespace gqca

#endif  // GQCA_GATES_HPP
