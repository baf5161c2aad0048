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

#ifndef QMAX_GATE_HPP
#define QMAX_GATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmax {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
    X,
    H,
    CNOT,
    Toffoli,
    /// (a, b, c) -> (a, a^b, ab^c). Equal to Toffoli(a, b -> c) followed by CNOT(a -> b).
    Peres,
    /// Adjoint of Peres: CNOT(a -> b) followed by Toffoli(a, b -> c).
    PeresDagger,
    MCX,
    /// Multiplies by -1 every basis state on which all operands are 0.
    PhaseFlipZero,
};

std::string_view gate_kind_name(GateKind kind);

/// One primitive gate. Operand conventions:
///   X, H:          targets = {t}
///   CNOT, Toffoli: controls = {c...}, targets = {t}
///   MCX:           controls = {c...} (any count >= 1), targets = {t}
///   Peres(Dagger): targets = {a, b, c}
///   PhaseFlipZero: targets = {q...} (at least one)
struct Gate {
    GateKind kind;
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;

    static Gate x(Qubit t);
    static Gate h(Qubit t);
    static Gate cnot(Qubit c, Qubit t);
    static Gate toffoli(Qubit c1, Qubit c2, Qubit t);
    static Gate mcx(std::vector<Qubit> controls, Qubit t);
    static Gate peres(Qubit a, Qubit b, Qubit c);
    static Gate phase_flip_zero(std::vector<Qubit> qubits);

    /// Controls followed by targets.
    std::vector<Qubit> operands() const;

    /// Throws std::invalid_argument if the operand shape is wrong for the kind,
    /// indices repeat, or any index is >= num_qubits.
    void validate(unsigned num_qubits) const;

    Gate inverse() const;

    /// True for X, CNOT, Toffoli, MCX, Peres and PeresDagger.
    bool is_permutation() const;

    std::string str() const;

    bool operator==(const Gate &other) const = default;
};

/// Ordered list of gates; the circuit IR shared by all builders.
class GateSequence {
   public:
    GateSequence() = default;
    explicit GateSequence(std::vector<Gate> gates) : gates_(std::move(gates)) {
    }

    void push_back(Gate g) {
        gates_.push_back(std::move(g));
    }
    void append(const GateSequence &other);

    /// The inverse circuit: gates in reverse order, each replaced by its inverse.
    GateSequence reverse() const;

    std::size_t size() const noexcept {
        return gates_.size();
    }
    bool empty() const noexcept {
        return gates_.empty();
    }
    const Gate &operator[](std::size_t i) const {
        return gates_[i];
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    auto begin() const noexcept {
        return gates_.begin();
    }
    auto end() const noexcept {
        return gates_.end();
    }

    /// Largest qubit index referenced plus one (0 for an empty sequence).
    unsigned min_qubits() const;

    std::map<GateKind, std::size_t> count_by_kind() const;

    bool operator==(const GateSequence &other) const = default;

   private:
    std::vector<Gate> gates_;
};

}  // namespace qmax

#endif
