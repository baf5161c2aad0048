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

#include "qmax/arithmetic.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qmax {

RegisterRef::RegisterRef(std::string name_, Qubit offset_, unsigned width_)
    : name(std::move(name_)), offset(offset_), width(width_) {
    if (width == 0) {
        throw std::invalid_argument("register '" + name + "' must have width >= 1");
    }
    if (width > 62) {
        throw std::invalid_argument("register '" + name + "' is wider than 62 bits");
    }
}

RegisterRef RegisterRef::slice(unsigned from, unsigned w) const {
    if (w == 0 || from + w > width) {
        throw std::invalid_argument("slice out of range for register '" + name + "'");
    }
    return RegisterRef(name, offset + from, w);
}

std::uint64_t RegisterRef::mask() const {
    return ((std::uint64_t{1} << width) - 1) << offset;
}

std::uint64_t RegisterRef::extract(std::uint64_t basis) const {
    return (basis >> offset) & ((std::uint64_t{1} << width) - 1);
}

std::uint64_t RegisterRef::deposit(std::uint64_t basis, std::uint64_t value) const {
    return (basis & ~mask()) | ((value << offset) & mask());
}

std::int64_t decode_signed(std::uint64_t bits, unsigned width) {
    const std::uint64_t m = (std::uint64_t{1} << width) - 1;
    bits &= m;
    if (bits >> (width - 1)) {
        return static_cast<std::int64_t>(bits) - static_cast<std::int64_t>(std::uint64_t{1} << width);
    }
    return static_cast<std::int64_t>(bits);
}

std::uint64_t encode_signed(std::int64_t value, unsigned width) {
    return static_cast<std::uint64_t>(value) & ((std::uint64_t{1} << width) - 1);
}

bool fits_signed(std::int64_t value, unsigned width) {
    const std::int64_t lo = -(std::int64_t{1} << (width - 1));
    const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
    return value >= lo && value <= hi;
}

namespace {

void require_disjoint(std::initializer_list<const RegisterRef *> regs, std::initializer_list<Qubit> singles) {
    std::vector<Qubit> all(singles);
    for (const RegisterRef *r : regs) {
        for (unsigned i = 0; i < r->width; ++i) {
            all.push_back(r->qubit(i));
        }
    }
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
        throw std::invalid_argument("operand ranges overlap at qubit " + std::to_string(*dup));
    }
}

void require_same_width(const RegisterRef &a, const RegisterRef &b) {
    if (a.width != b.width) {
        throw std::invalid_argument(
            "register widths differ: '" + a.name + "' has " + std::to_string(a.width) + ", '" + b.name + "' has " +
            std::to_string(b.width));
    }
}

/// X on `t` controlled by all of `controls`, using the narrowest gate kind.
Gate controlled_x(std::vector<Qubit> controls, Qubit t) {
    switch (controls.size()) {
        case 0:
            return Gate::x(t);
        case 1:
            return Gate::cnot(controls[0], t);
        case 2:
            return Gate::toffoli(controls[0], controls[1], t);
        default:
            return Gate::mcx(std::move(controls), t);
    }
}

// The ripple adder is built from four stages over lines a_0..a_{n-1}, a_n := high:
//   fan_in:   CNOT a_i -> b_i                  (i = 1..n-1)
//   chain:    CNOT a_i -> a_{i+1}              (i = n-2..1)
//   carries:  Toffoli b_i, a_i -> a_{i+1}      (i = 0..n-2)
//   sum:      Peres a_i, b_i, a_{i+1}          (i = n-1..0)
// The full adder is fan_in, CNOT a_{n-1} -> high, chain, carries, sum, chain^-1, fan_in.

GateSequence fan_in(const RegisterRef &a, const RegisterRef &b) {
    GateSequence s;
    for (unsigned i = 1; i < a.width; ++i) {
        s.push_back(Gate::cnot(a.qubit(i), b.qubit(i)));
    }
    return s;
}

GateSequence chain(const RegisterRef &a) {
    GateSequence s;
    for (unsigned i = a.width - 1; i-- > 1;) {
        s.push_back(Gate::cnot(a.qubit(i), a.qubit(i + 1)));
    }
    return s;
}

GateSequence carries(const RegisterRef &a, const RegisterRef &b) {
    GateSequence s;
    for (unsigned i = 0; i + 1 < a.width; ++i) {
        s.push_back(Gate::toffoli(b.qubit(i), a.qubit(i), a.qubit(i + 1)));
    }
    return s;
}

Qubit line_above(const RegisterRef &a, unsigned i, Qubit high) {
    return i + 1 < a.width ? a.qubit(i + 1) : high;
}

}  // namespace

GateSequence build_adder(const RegisterRef &a, const RegisterRef &b, Qubit high) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {high});
    const unsigned n = a.width;
    GateSequence s = fan_in(a, b);
    if (n >= 2) {
        s.push_back(Gate::cnot(a.top(), high));
    }
    const GateSequence ch = chain(a);
    s.append(ch);
    s.append(carries(a, b));
    for (unsigned i = n; i-- > 0;) {
        s.push_back(Gate::peres(a.qubit(i), b.qubit(i), line_above(a, i, high)));
    }
    s.append(ch.reverse());
    s.append(fan_in(a, b));
    return s;
}

GateSequence build_controlled_adder(Qubit ctrl, const RegisterRef &a, const RegisterRef &b, Qubit high) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {high, ctrl});
    const unsigned n = a.width;
    // fan_in and chain are undone later in the adder, so they stay uncontrolled;
    // only the stages between them need the extra control.
    GateSequence s = fan_in(a, b);
    if (n >= 2) {
        s.push_back(Gate::toffoli(ctrl, a.top(), high));
    }
    const GateSequence ch = chain(a);
    s.append(ch);
    for (unsigned i = 0; i + 1 < n; ++i) {
        s.push_back(Gate::mcx({ctrl, b.qubit(i), a.qubit(i)}, a.qubit(i + 1)));
    }
    for (unsigned i = n; i-- > 0;) {
        const Qubit x = a.qubit(i), y = b.qubit(i), z = line_above(a, i, high);
        s.push_back(Gate::mcx({ctrl, x, y}, z));
        s.push_back(Gate::toffoli(ctrl, x, y));
    }
    s.append(ch.reverse());
    s.append(fan_in(a, b));
    return s;
}

GateSequence build_subtractor(const RegisterRef &a, const RegisterRef &b, Qubit high) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {high});
    // B - A = (B' + A)'
    const GateSequence flip_b = build_load_constant((std::uint64_t{1} << b.width) - 1, b);
    GateSequence s = flip_b;
    s.append(build_adder(a, b, high));
    s.append(flip_b);
    return s;
}

GateSequence build_comparator(const RegisterRef &a, const RegisterRef &b, Qubit flag) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {flag});
    const unsigned n = a.width;
    // The carry-out of A' + B is 1 exactly when A < B. Compute only that carry
    // into `flag`, then undo the work lines.
    const GateSequence flip_a = build_load_constant((std::uint64_t{1} << n) - 1, a);
    const GateSequence fi = fan_in(a, b);
    const GateSequence ch = chain(a);
    const GateSequence ca = carries(a, b);

    GateSequence s = flip_a;
    s.append(fi);
    if (n >= 2) {
        s.push_back(Gate::cnot(a.top(), flag));
    }
    s.append(ch);
    s.append(ca);
    s.push_back(Gate::toffoli(a.top(), b.top(), flag));
    s.append(ca.reverse());
    s.append(ch.reverse());
    s.append(fi);
    s.append(flip_a);
    return s;
}

GateSequence build_signed_comparator(const RegisterRef &a, const RegisterRef &b, Qubit flag) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {flag});
    // Flipping both sign bits maps two's complement order onto unsigned order.
    GateSequence s;
    s.push_back(Gate::x(a.top()));
    s.push_back(Gate::x(b.top()));
    s.append(build_comparator(a, b, flag));
    s.push_back(Gate::x(a.top()));
    s.push_back(Gate::x(b.top()));
    return s;
}

GateSequence build_modular_adder(const RegisterRef &a, const RegisterRef &b) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {});
    const unsigned n = a.width;
    GateSequence s;
    if (n >= 2) {
        s = build_adder(a.slice(0, n - 1), b.slice(0, n - 1), b.top());
    }
    s.push_back(Gate::cnot(a.top(), b.top()));
    return s;
}

GateSequence build_controlled_modular_adder(Qubit ctrl, const RegisterRef &a, const RegisterRef &b) {
    require_same_width(a, b);
    require_disjoint({&a, &b}, {ctrl});
    const unsigned n = a.width;
    GateSequence s;
    if (n >= 2) {
        s = build_controlled_adder(ctrl, a.slice(0, n - 1), b.slice(0, n - 1), b.top());
    }
    s.push_back(Gate::toffoli(ctrl, a.top(), b.top()));
    return s;
}

GateSequence build_load_constant(std::uint64_t value, const RegisterRef &reg) {
    if (reg.width < 64 && (value >> reg.width) != 0) {
        throw std::invalid_argument(
            "constant " + std::to_string(value) + " does not fit in " + std::to_string(reg.width) +
            "-bit register '" + reg.name + "'");
    }
    GateSequence s;
    for (unsigned i = 0; i < reg.width; ++i) {
        if ((value >> i) & 1) {
            s.push_back(Gate::x(reg.qubit(i)));
        }
    }
    return s;
}

GateSequence build_controlled_negate(Qubit ctrl, const RegisterRef &f) {
    require_disjoint({&f}, {ctrl});
    GateSequence s;
    for (unsigned i = 0; i < f.width; ++i) {
        s.push_back(Gate::cnot(ctrl, f.qubit(i)));
    }
    // Controlled increment: bit i flips when ctrl and all lower bits are 1.
    for (unsigned i = f.width; i-- > 0;) {
        std::vector<Qubit> controls{ctrl};
        for (unsigned j = 0; j < i; ++j) {
            controls.push_back(f.qubit(j));
        }
        s.push_back(controlled_x(std::move(controls), f.qubit(i)));
    }
    return s;
}

}  // namespace qmax
