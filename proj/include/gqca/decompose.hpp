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


#ifndef GQCA_DECOMPOSE_HPP
#define GQCA_DECOMPOSE_HPP

#include <vector>

#include "gqca/gates.hpp"

namespace gqca {

/// CH(control, target) = Y^{1/4}(target) CZ Y^{-1/4}(target), returned in
/// time order. Throws TopologyError unless the sites are adjacent.
std::vector<Gate> decompose_ch(int control, int target);

/// phi reduced into [0, 2 pi); the angle solution below holds on that range.
double reduce_phase(double phi);

struct CphaseParameters {
    double alpha = 0.0;
    double xi_i = 0.0;
    double xi_j = 0.0;
};

/// Solves for the single-qubit angles that turn two K(theta) CPHASE(varphi)
/// primitives into CPHASE(phi). Throws InfeasibleError when
/// sin^2(phi/4) < sin^2(varphi/2) or sin^2(theta) <= sin^2(varphi/2).
CphaseParameters cphase_parameters(double phi, double parasitic, double theta);

/// CPHASE(phi) on (site_i, site_j) as a time-ordered gate list around two
/// FractionalIswap(theta, 0, 0, 0, parasitic) primitives. The product equals
/// CPHASE(phi) up to global phase.
///
/// The first z layer uses the primitive's parasitic angle, Rz(varphi/2) on
/// both sites; with the target angle there, as in the commonly quoted form,
/// the sequence does not compose to CPHASE(phi).
std::vector<Gate> decompose_cphase(int site_i, int site_j, double phi, double parasitic, double theta);

/// Z rotations executed with a characterized two-qubit gate, in radians:
/// R_Z(post_i, post_j) K R_Z(pre_i, pre_j), R_Z(z_i, z_j) =
/// e^{i(z_i+z_j)/2} Rz(z_i) Rz(z_j).
struct FloquetCorrection {
    double pre_i = 0.0;
    double pre_j = 0.0;
    double post_i = 0.0;
    double post_j = 0.0;
};

/// Correction that removes zeta and gamma from K(theta, zeta, chi, gamma,
/// phi) with chi treated as 0 (it cannot be characterized). The corrected
/// gate equals K(theta, 0, 0, 0, phi) exactly when chi is 0.
FloquetCorrection floquet_correct(const FsimAngles &characterized);

/// Copy of a FractionalIswap gate with the correction for its own angles
/// attached.
Gate with_floquet_correction(const Gate &fsim);

/// The correction as explicit gates in time order: Rz pre layer, the gate,
/// Rz post layer (global phase dropped).
std::vector<Gate> floquet_sequence(const Gate &fsim);

}  // namespace gqca

#endif  // GQCA_DECOMPOSE_HPP
