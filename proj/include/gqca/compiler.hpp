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


#ifndef GQCA_COMPILER_HPP
#define GQCA_COMPILER_HPP

#include <map>
#include <numbers>
#include <utility>

#include "gqca/circuit.hpp"
#include "gqca/rule.hpp"

namespace gqca {

inline constexpr double kDefaultParasiticPhi = std::numbers::pi / 23.0;

/// Characterized angles of the native two-qubit gate per coupler. Couplers
/// without an entry use `nominal`.
struct CalibrationParams {
    FsimAngles nominal{std::numbers::pi / 4, 0.0, 0.0, 0.0, kDefaultParasiticPhi};
    /// Keyed by (lower site, upper site).
    std::map<std::pair<int, int>, FsimAngles> couplers;

    const FsimAngles &at(int a, int b) const;
    /// Every coupler is K(pi/4) CPHASE(parasitic).
    static CalibrationParams ideal(double parasitic = 0.0);
};

struct CompileOptions {
    /// Re-decompose CZ gates with each coupler's characterized cphase.
    bool compensate = true;
    /// Attach the z-rotation correction for characterized zeta and gamma.
    bool floquet = true;
    bool merge = true;
    bool echoes = true;
    /// Swap angle assumed when decomposing CZ; the hardware value is left
    /// uncorrected.
    double design_theta = std::numbers::pi / 4;
};

/// Unmerged circuit of `cycles` T6 cycles with V = H: CH gates through CZ
/// into native two-qubit gates. Throws NotImplementedError for any other
/// rule and DomainError for length < 2.
CompiledCircuit lower_cycles(const RuleSpec &rule, int length, int cycles, const CalibrationParams &calibration,
                             const CompileOptions &options = {});

/// Collapses the single-qubit gates a site sees between two of its
/// two-qubit gates into one PhXZ, placed in the first single-qubit layer
/// after the earlier two-qubit gate. Echo gates are kept and split runs.
/// The output alternates single-qubit layers with two-qubit moments.
CompiledCircuit merge_single_qubit_runs(const CompiledCircuit &circuit);

/// Fills idle spans of more than one single-qubit layer with X echo gates:
/// every idle layer for even spans, all but the last for odd ones. The
/// circuit's start and end bound the first and last spans.
CompiledCircuit insert_spin_echoes(const CompiledCircuit &circuit);

/// Full pipeline: lower, merge, insert echoes.
CompiledCircuit compile_cycles(const RuleSpec &rule, int length, int cycles, const CalibrationParams &calibration,
                               const CompileOptions &options = {});
CompiledCircuit compile_cycle(const RuleSpec &rule, int length, const CalibrationParams &calibration,
                              const CompileOptions &options = {});

/// Gate volume of `cycles` cycles at chain length `length` from a compiled
/// single cycle; cumulative counts scale linearly.
struct GateVolume {
    int length = 0;
    int cycles = 0;
    int two_qubit_per_cycle = 0;
    int single_qubit_per_cycle = 0;
    int layers_per_cycle = 0;
    /// Single-qubit gates before merging and echo insertion.
    int unmerged_single_qubit_per_cycle = 0;
    long long cumulative_two_qubit = 0;
    long long cumulative_single_qubit = 0;
};
GateVolume compile_stats(const RuleSpec &rule, int length, int cycles);

}  // namespace gqca

#endif  // GQCA_COMPILER_HPP
