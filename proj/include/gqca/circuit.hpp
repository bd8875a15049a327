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


#ifndef GQCA_CIRCUIT_HPP
#define GQCA_CIRCUIT_HPP

#include <string>
#include <vector>

#include "gqca/gates.hpp"
#include "gqca/statevector.hpp"

namespace gqca {

/// Gates acting in parallel on pairwise-disjoint sites.
struct Moment {
    std::vector<Gate> gates;
    /// QCA cycle this moment belongs to; -1 marks the trailing single-qubit
    /// layer after the last two-qubit moment.
    int cycle = 0;

    /// Throws DomainError if `gate` overlaps a site already in use.
    void add(const Gate &gate);
    bool has_two_qubit_gate() const;
    bool touches(int site) const;
};

struct CompiledCircuit {
    int length = 0;
    std::vector<Moment> moments;

    /// Index of the first moment of each cycle, in cycle order.
    std::vector<size_t> cycle_starts() const;
    int num_cycles() const;
};

/// Gate counts of one cycle.
struct CycleGateCount {
    int cycle = 0;
    int single_qubit = 0;
    int two_qubit = 0;
    int two_qubit_layers = 0;
    int single_qubit_layers = 0;
};

struct GateCountReport {
    std::vector<CycleGateCount> cycles;
    /// Single-qubit gates in the trailing layer (cycle -1).
    int trailing_single_qubit = 0;
    int total_single_qubit = 0;
    int total_two_qubit = 0;
};

GateCountReport count_gates(const CompiledCircuit &circuit);

/// Applies every moment in order.
void apply_circuit(Statevector &state, const CompiledCircuit &circuit);
void apply_gate(Statevector &state, const Gate &gate);

/// Dense circuit unitary for length <= kMaxDenseQubits.
MatX circuit_unitary(const CompiledCircuit &circuit);

/// JSON document {"length", "moments": [{"cycle", "gates": [{kind, targets,
/// params, echo}]}]}.
std::string circuit_to_json(const CompiledCircuit &circuit);
CompiledCircuit circuit_from_json(const std::string &text);

}  // namespace gqca

#endif  // GQCA_CIRCUIT_HPP
