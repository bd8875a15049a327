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


#include "gqca/decompose.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e-12;

// pi/2 (1 - sgn(v)), with sgn(0) taken as +1 so the unperturbed primitive
// needs no offset.
double branch_offset(double v) {
    return v < 0.0 ? kPi : 0.0;
}

// atan(tan(alpha) * num / den) including the limits at den = 0 and at
// alpha = pi/2.
double xi_angle(double alpha, double num, double den) {
    const bool tan_infinite = std::abs(std::cos(alpha)) < 1e-15;
    const double tan_alpha = tan_infinite ? std::numeric_limits<double>::infinity() : std::tan(alpha);
    if (tan_alpha == 0.0 || num == 0.0) {
        return 0.0;
    }
    if (tan_infinite || den == 0.0) {
        const double sign = (num > 0.0) == (den >= 0.0) ? 1.0 : -1.0;
        return sign * kPi / 2.0;
    }
    return std::atan(tan_alpha * num / den);
}

}  // namespace

double reduce_phase(double phi) {
    double r = std::fmod(phi, 2.0 * kPi);
    return r < 0.0 ? r + 2.0 * kPi : r;
}

std::vector<Gate> decompose_ch(int control, int target) {
    if (std::abs(control - target) != 1) {
        throw TopologyError("CH needs adjacent sites, got " + std::to_string(control) + " and " +
                            std::to_string(target));
    }
    return {ypow_gate(target, -0.25), cz_gate(control, target), ypow_gate(target, 0.25)};
}

CphaseParameters cphase_parameters(double phi, double parasitic, double theta) {
    phi = reduce_phase(phi);
    const double sp = std::pow(std::sin(parasitic / 2.0), 2);
    const double num = std::pow(std::sin(phi / 4.0), 2) - sp;
    const double den = std::pow(std::sin(theta), 2) - sp;
    if (!(den > 0.0)) {
        throw InfeasibleError("CPHASE decomposition needs sin^2(theta) > sin^2(parasitic/2)");
    }
    double ratio = num / den;
    if (ratio < 0.0 && ratio > -kClamp) {
        ratio = 0.0;
    }
    if (ratio > 1.0 && ratio < 1.0 + kClamp) {
        ratio = 1.0;
    }
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw InfeasibleError("CPHASE(" + std::to_string(phi) + ") is unreachable with parasitic phase " +
                              std::to_string(parasitic) + " and theta " + std::to_string(theta));
    }
    CphaseParameters p;
    p.alpha = std::asin(std::sqrt(ratio));
    const double c = std::cos(parasitic / 2.0), s = std::sin(parasitic / 2.0);
    p.xi_i = xi_angle(p.alpha, std::cos(theta), c) + branch_offset(c);
    p.xi_j = xi_angle(p.alpha, std::sin(theta), s) + branch_offset(s);
    return p;
}

std::vector<Gate> decompose_cphase(int site_i, int site_j, double phi, double parasitic, double theta) {
    if (std::abs(site_i - site_j) != 1) {
        throw TopologyError("CPHASE needs adjacent sites");
    }
    phi = reduce_phase(phi);
    const CphaseParameters p = cphase_parameters(phi, parasitic, theta);
    const FsimAngles k{theta, 0.0, 0.0, 0.0, parasitic};
    return {
        rx_gate(site_i, p.xi_i),
        rx_gate(site_j, p.xi_j),
        rz_gate(site_i, parasitic / 2.0),
        rz_gate(site_j, parasitic / 2.0),
        fsim_gate(site_i, site_j, k),
        rx_gate(site_i, -2.0 * p.alpha),
        rz_gate(site_i, kPi + parasitic / 2.0),
        rz_gate(site_j, parasitic / 2.0),
        fsim_gate(site_i, site_j, k),
        rx_gate(site_i, -p.xi_i),
        rx_gate(site_j, -p.xi_j),
        rz_gate(site_i, kPi - phi / 2.0),
        rz_gate(site_j, -phi / 2.0),
    };
}

FloquetCorrection floquet_correct(const FsimAngles &k) {
    // With chi set to 0, alpha = beta = zeta / 2.
    const double alpha = k.zeta / 2.0;
    const double beta = k.zeta / 2.0;
    FloquetCorrection c;
    c.pre_i = -alpha;
    c.pre_j = alpha;
    c.post_i = k.gamma - beta;
    c.post_j = k.gamma + beta;
    return c;
}

Gate with_floquet_correction(const Gate &fsim) {
    if (fsim.kind != GateKind::FractionalIswap || fsim.params.size() != 9) {
        throw DomainError("Floquet correction applies to FractionalIswap gates");
    }
    const FsimAngles k{fsim.params[0], fsim.params[1], fsim.params[2], fsim.params[3], fsim.params[4]};
    const FloquetCorrection c = floquet_correct(k);
    Gate out = fsim;
    out.params[5] = c.pre_i;
    out.params[6] = c.pre_j;
    out.params[7] = c.post_i;
    out.params[8] = c.post_j;
    return out;
}

std::vector<Gate> floquet_sequence(const Gate &fsim) {
    const Gate corrected = with_floquet_correction(fsim);
    Gate bare = fsim;
    std::fill(bare.params.begin() + 5, bare.params.end(), 0.0);
    return {
        rz_gate(fsim.targets[0], corrected.params[5]),
        rz_gate(fsim.targets[1], corrected.params[6]),
        bare,
        rz_gate(fsim.targets[0], corrected.params[7]),
        rz_gate(fsim.targets[1], corrected.params[8]),
    };
}

}  // namespace gqca
