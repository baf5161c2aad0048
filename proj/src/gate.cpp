// Copyright 2026 The qmax Authors
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

#include "qmax/gate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmax {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::H:
            return "H";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::Toffoli:
            return "TOFFOLI";
        case GateKind::Peres:
            return "PERES";
        case GateKind::PeresDagger:
            return "PERES_DAG";
        case GateKind::MCX:
            return "MCX";
        case GateKind::PhaseFlipZero:
            return "CPHASE_FLIP_ZERO";
    }
    return "?";
}

Gate Gate::x(Qubit t) {
    return Gate{GateKind::X, {}, {t}};
}

Gate Gate::h(Qubit t) {
    return Gate{GateKind::H, {}, {t}};
}

Gate Gate::cnot(Qubit c, Qubit t) {
    return Gate{GateKind::CNOT, {c}, {t}};
}

Gate Gate::toffoli(Qubit c1, Qubit c2, Qubit t) {
    return Gate{GateKind::Toffoli, {c1, c2}, {t}};
}

Gate Gate::mcx(std::vector<Qubit> controls, Qubit t) {
    return Gate{GateKind::MCX, std::move(controls), {t}};
}

Gate Gate::peres(Qubit a, Qubit b, Qubit c) {
    return Gate{GateKind::Peres, {}, {a, b, c}};
}

Gate Gate::phase_flip_zero(std::vector<Qubit> qubits) {
    return Gate{GateKind::PhaseFlipZero, {}, std::move(qubits)};
}

std::vector<Qubit> Gate::operands() const {
    std::vector<Qubit> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    return all;
}

void Gate::validate(unsigned num_qubits) const {
    auto shape_error = [&](const char *msg) {
        throw std::invalid_argument(std::string(gate_kind_name(kind)) + ": " + msg + " in " + str());
    };
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
            if (!controls.empty() || targets.size() != 1) {
                shape_error("expected one target and no controls");
            }
            break;
        case GateKind::CNOT:
            if (controls.size() != 1 || targets.size() != 1) {
                shape_error("expected one control and one target");
            }
            break;
        case GateKind::Toffoli:
            if (controls.size() != 2 || targets.size() != 1) {
                shape_error("expected two controls and one target");
            }
            break;
        case GateKind::MCX:
            if (controls.empty() || targets.size() != 1) {
                shape_error("expected at least one control and one target");
            }
            break;
        case GateKind::Peres:
        case GateKind::PeresDagger:
            if (!controls.empty() || targets.size() != 3) {
                shape_error("expected exactly three operands");
            }
            break;
        case GateKind::PhaseFlipZero:
            if (!controls.empty() || targets.empty()) {
                shape_error("expected at least one operand");
            }
            break;
    }
    std::vector<Qubit> all = operands();
    for (Qubit q : all) {
        if (q >= num_qubits) {
            throw std::invalid_argument(
                "qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits) +
                " qubits in " + str());
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("repeated qubit operand in " + str());
    }
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (kind == GateKind::Peres) {
        g.kind = GateKind::PeresDagger;
    } else if (kind == GateKind::PeresDagger) {
        g.kind = GateKind::Peres;
    }
    return g;
}

bool Gate::is_permutation() const {
    return kind != GateKind::H && kind != GateKind::PhaseFlipZero;
}

std::string Gate::str() const {
    std::ostringstream out;
    out << gate_kind_name(kind);
    bool first = true;
    for (Qubit q : operands()) {
        out << (first ? " " : ",") << q;
        first = false;
    }
    return out.str();
}

void GateSequence::append(const GateSequence &other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateSequence GateSequence::reverse() const {
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return GateSequence(std::move(out));
}

unsigned GateSequence::min_qubits() const {
    unsigned n = 0;
    for (const Gate &g : gates_) {
        for (Qubit q : g.controls) {
            n = std::max<unsigned>(n, q + 1);
        }
        for (Qubit q : g.targets) {
            n = std::max<unsigned>(n, q + 1);
        }
    }
    return n;
}

std::map<GateKind, std::size_t> GateSequence::count_by_kind() const {
    std::map<GateKind, std::size_t> counts;
    for (const Gate &g : gates_) {
        ++counts[g.kind];
    }
    return counts;
}

}  // namespace qmax
