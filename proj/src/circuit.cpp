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


#include "gqca/circuit.hpp"

#include <json.hpp>
#include <map>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {

void Moment::add(const Gate &gate) {
    for (int k = 0; k < gate.arity(); ++k) {
        if (touches(gate.targets[static_cast<size_t>(k)])) {
            throw DomainError("site " + std::to_string(gate.targets[static_cast<size_t>(k)]) +
                              " already used in this moment");
        }
    }
    if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
        throw DomainError("two-qubit gate needs distinct sites");
    }
    gates.push_back(gate);
}

bool Moment::has_two_qubit_gate() const {
    for (const Gate &g : gates) {
        if (g.arity() == 2) {
            return true;
        }
    }
    return false;
}

bool Moment::touches(int site) const {
    for (const Gate &g : gates) {
        if (g.targets[0] == site || (g.arity() == 2 && g.targets[1] == site)) {
            return true;
        }
    }
    return false;
}

std::vector<size_t> CompiledCircuit::cycle_starts() const {
    std::vector<size_t> starts;
    int last = -2;
    for (size_t m = 0; m < moments.size(); ++m) {
        const int c = moments[m].cycle;
        if (c >= 0 && c != last) {
            starts.push_back(m);
            last = c;
        }
    }
    return starts;
}

int CompiledCircuit::num_cycles() const {
    return static_cast<int>(cycle_starts().size());
}

GateCountReport count_gates(const CompiledCircuit &circuit) {
    std::map<int, CycleGateCount> per;
    GateCountReport report;
    for (const Moment &m : circuit.moments) {
        int ones = 0, twos = 0;
        for (const Gate &g : m.gates) {
            (g.arity() == 2 ? twos : ones) += 1;
        }
        report.total_single_qubit += ones;
        report.total_two_qubit += twos;
        if (m.cycle < 0) {
            report.trailing_single_qubit += ones;
            continue;
        }
        CycleGateCount &c = per[m.cycle];
        c.cycle = m.cycle;
        c.single_qubit += ones;
        c.two_qubit += twos;
        if (twos > 0) {
            ++c.two_qubit_layers;
        } else if (ones > 0) {
            ++c.single_qubit_layers;
        }
    }
    for (auto &[cycle, c] : per) {
        report.cycles.push_back(c);
    }
    return report;
}

void apply_gate(Statevector &state, const Gate &gate) {
    if (gate.arity() == 1) {
        state.apply_1q(Mat2(gate.matrix()), gate.targets[0]);
    } else {
        state.apply_2q(Mat4(gate.matrix()), gate.targets[0], gate.targets[1]);
    }
}

void apply_circuit(Statevector &state, const CompiledCircuit &circuit) {
    if (state.num_qubits() != circuit.length) {
        throw DomainError("circuit and state lengths differ");
    }
    for (const Moment &m : circuit.moments) {
        for (const Gate &g : m.gates) {
            apply_gate(state, g);
        }
    }
}

MatX circuit_unitary(const CompiledCircuit &circuit) {
    if (circuit.length > kMaxDenseQubits) {
        throw CapacityError("dense circuit unitary limited to L <= " + std::to_string(kMaxDenseQubits));
    }
    const uint64_t dim = uint64_t{1} << circuit.length;
    MatX u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (uint64_t col = 0; col < dim; ++col) {
        Statevector s = Statevector::basis(BitString(circuit.length, col));
        apply_circuit(s, circuit);
        for (uint64_t row = 0; row < dim; ++row) {
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
        }
    }
    return u;
}

std::string circuit_to_json(const CompiledCircuit &circuit) {
    nlohmann::json doc;
    doc["length"] = circuit.length;
    doc["moments"] = nlohmann::json::array();
    for (const Moment &m : circuit.moments) {
        nlohmann::json jm;
        jm["cycle"] = m.cycle;
        jm["gates"] = nlohmann::json::array();
        for (const Gate &g : m.gates) {
            nlohmann::json jg;
            jg["kind"] = gate_kind_name(g.kind);
            jg["targets"] = g.arity() == 2 ? nlohmann::json{g.targets[0], g.targets[1]} : nlohmann::json{g.targets[0]};
            jg["params"] = g.params;
            if (g.echo) {
                jg["echo"] = true;
            }
            jm["gates"].push_back(jg);
        }
        doc["moments"].push_back(jm);
    }
    return doc.dump();
}

CompiledCircuit circuit_from_json(const std::string &text) {
    CompiledCircuit c;
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        c.length = doc.at("length").get<int>();
        for (const auto &jm : doc.at("moments")) {
            Moment m;
            m.cycle = jm.at("cycle").get<int>();
            for (const auto &jg : jm.at("gates")) {
                Gate g;
                g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
                const auto &t = jg.at("targets");
                g.targets[0] = t.at(0).get<int>();
                if (t.size() > 1) {
                    g.targets[1] = t.at(1).get<int>();
                }
                g.params = jg.at("params").get<std::vector<double>>();
                g.echo = jg.value("echo", false);
                m.add(g);
            }
            c.moments.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed circuit JSON: ") + e.what());
    }
    return c;
}

}  // namespace gqca
