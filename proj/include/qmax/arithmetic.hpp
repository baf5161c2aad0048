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

#ifndef QMAX_ARITHMETIC_HPP
#define QMAX_ARITHMETIC_HPP

#include <cstdint>
#include <string>

#include "qmax/gate.hpp"

// Reversible integer arithmetic. Registers are little-endian: qubit offset + i
// holds bit i of the value. All builders are pure and return a fresh sequence;
// they throw std::invalid_argument on width mismatch or overlapping operands.

namespace qmax {

/// A contiguous range of qubits holding one integer.
struct RegisterRef {
    std::string name;
    Qubit offset = 0;
    unsigned width = 0;

    RegisterRef() = default;
    RegisterRef(std::string name, Qubit offset, unsigned width);

    Qubit qubit(unsigned i) const {
        return offset + i;
    }
    Qubit top() const {
        return offset + width - 1;
    }
    Qubit end() const {
        return offset + width;
    }
    bool contains(Qubit q) const {
        return q >= offset && q < end();
    }
    /// The `w` qubits starting at bit `from`.
    RegisterRef slice(unsigned from, unsigned w) const;

    /// Bitmask of this register within a basis index.
    std::uint64_t mask() const;
    /// Reads the register's value from a basis index.
    std::uint64_t extract(std::uint64_t basis) const;
    /// Writes `value` into the register's bits of `basis`.
    std::uint64_t deposit(std::uint64_t basis, std::uint64_t value) const;

    bool operator==(const RegisterRef &other) const = default;
};

/// Two's-complement helpers for a p-bit signed encoding.
std::int64_t decode_signed(std::uint64_t bits, unsigned width);
std::uint64_t encode_signed(std::int64_t value, unsigned width);
bool fits_signed(std::int64_t value, unsigned width);

/// In-place addition |A, B, h> -> |A, (A+B) mod 2^n, h ^ carry>. Peres-gate ripple
/// design with no ancilla beyond `high`.
GateSequence build_adder(const RegisterRef &a, const RegisterRef &b, Qubit high);

/// build_adder when ctrl is 1, identity otherwise.
GateSequence build_controlled_adder(Qubit ctrl, const RegisterRef &a, const RegisterRef &b, Qubit high);

/// b <- (B - A) mod 2^n via complement-add-complement. high ^= [B < A] (the borrow).
GateSequence build_subtractor(const RegisterRef &a, const RegisterRef &b, Qubit high);

/// flag ^= [A < B] (unsigned, strict). a and b are restored.
GateSequence build_comparator(const RegisterRef &a, const RegisterRef &b, Qubit flag);

/// flag ^= [A < B] with both operands read as two's complement. a and b are restored.
GateSequence build_signed_comparator(const RegisterRef &a, const RegisterRef &b, Qubit flag);

/// b <- (A + B) mod 2^n. The top bit of b serves as the carry-out of an adder over
/// the low n-1 bits; no extra qubit is used.
GateSequence build_modular_adder(const RegisterRef &a, const RegisterRef &b);

/// build_modular_adder when ctrl is 1, identity otherwise.
GateSequence build_controlled_modular_adder(Qubit ctrl, const RegisterRef &a, const RegisterRef &b);

/// X gates on the set bits of value. Self-inverse, so the same sequence unloads.
GateSequence build_load_constant(std::uint64_t value, const RegisterRef &reg);

/// f <- -f (two's complement) when ctrl is 1. -2^(p-1) maps to itself.
GateSequence build_controlled_negate(Qubit ctrl, const RegisterRef &f);

}  // namespace qmax

#endif
