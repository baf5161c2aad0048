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

#include "qmax/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmax/errors.hpp"

namespace qmax {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline std::uint64_t bit(Qubit q) {
    return std::uint64_t{1} << q;
}

std::uint64_t mask_of(const std::vector<Qubit> &qubits) {
    std::uint64_t m = 0;
    for (Qubit q : qubits) {
        m |= bit(q);
    }
    return m;
}

/// Image of a basis index under a permutation gate.
struct IndexPermutation {
    GateKind kind;
    std::uint64_t controls = 0;
    std::uint64_t target = 0;
    // Peres operands.
    std::uint64_t a = 0, b = 0, c = 0;

    explicit IndexPermutation(const Gate &g) : kind(g.kind) {
        if (kind == GateKind::Peres || kind == GateKind::PeresDagger) {
            a = bit(g.targets[0]);
            b = bit(g.targets[1]);
            c = bit(g.targets[2]);
        } else {
            controls = mask_of(g.controls);
            target = bit(g.targets[0]);
        }
    }

    std::uint64_t operator()(std::uint64_t i) const {
        switch (kind) {
            case GateKind::Peres:
                if ((i & (a | b)) == (a | b)) {
                    i ^= c;
                }
                if (i & a) {
                    i ^= b;
                }
                return i;
            case GateKind::PeresDagger:
                if (i & a) {
                    i ^= b;
                }
                if ((i & (a | b)) == (a | b)) {
                    i ^= c;
                }
                return i;
            default:
                return (i & controls) == controls ? i ^ target : i;
        }
    }
};

void controlled_flip_dense(std::vector<Amplitude> &amps, std::uint64_t controls, std::uint64_t target) {
    const std::uint64_t n = amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & target) == 0 && (i & controls) == controls) {
            std::swap(amps[i], amps[i | target]);
        }
    }
}

}  // namespace

StateVector::StateVector(unsigned num_qubits, unsigned qubit_cap, Storage storage) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("a state needs at least one qubit");
    }
    unsigned cap = std::min(qubit_cap, kMaxQubits);
    if (num_qubits > cap) {
        throw CapacityError(
            "state of " + std::to_string(num_qubits) + " qubits exceeds the qubit cap of " + std::to_string(cap),
            num_qubits, cap);
    }
    entries_.push_back({0, Amplitude{1.0, 0.0}});
    if (storage == Storage::Dense) {
        densify();
    } else {
        maybe_densify();
    }
}

Amplitude StateVector::amplitude(std::uint64_t basis) const {
    if (basis >= dimension()) {
        throw std::invalid_argument(
            "basis index " + std::to_string(basis) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
    if (dense_mode_) {
        return dense_[basis];
    }
    for (const Entry &e : entries_) {
        if (e.index == basis) {
            return e.amp;
        }
    }
    return {};
}

std::vector<Amplitude> StateVector::amplitudes() const {
    if (dense_mode_) {
        return dense_;
    }
    std::vector<Amplitude> out(dimension());
    for (const Entry &e : entries_) {
        out[e.index] = e.amp;
    }
    return out;
}

void StateVector::set_basis_state(std::uint64_t basis) {
    if (basis >= dimension()) {
        throw std::invalid_argument("basis index " + std::to_string(basis) + " out of range");
    }
    if (dense_mode_) {
        std::fill(dense_.begin(), dense_.end(), Amplitude{});
        dense_[basis] = 1.0;
    } else {
        entries_.assign(1, Entry{basis, Amplitude{1.0, 0.0}});
    }
}

void StateVector::densify() {
    dense_.assign(dimension(), Amplitude{});
    for (const Entry &e : entries_) {
        dense_[e.index] = e.amp;
    }
    entries_.clear();
    entries_.shrink_to_fit();
    dense_mode_ = true;
}

void StateVector::maybe_densify() {
    if (!dense_mode_ && entries_.size() * 8 > dimension()) {
        densify();
    }
}

void StateVector::apply(const Gate &gate) {
    gate.validate(num_qubits_);
    apply_unchecked(gate);
}

void StateVector::apply(const GateSequence &seq) {
    for (std::size_t k = 0; k < seq.size(); ++k) {
        try {
            seq[k].validate(num_qubits_);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("gate #" + std::to_string(k) + ": " + e.what());
        }
    }
    for (const Gate &g : seq) {
        apply_unchecked(g);
    }
}

void StateVector::apply_unchecked(const Gate &gate) {
    if (dense_mode_) {
        apply_dense(gate);
    } else {
        apply_sparse(gate);
        maybe_densify();
    }
}

void StateVector::apply_dense(const Gate &gate) {
    const std::uint64_t n = dense_.size();
    switch (gate.kind) {
        case GateKind::H: {
            const std::uint64_t t = bit(gate.targets[0]);
            for (std::uint64_t i = 0; i < n; ++i) {
                if (i & t) {
                    continue;
                }
                Amplitude a0 = dense_[i];
                Amplitude a1 = dense_[i | t];
                dense_[i] = (a0 + a1) * kInvSqrt2;
                dense_[i | t] = (a0 - a1) * kInvSqrt2;
            }
            return;
        }
        case GateKind::PhaseFlipZero: {
            const std::uint64_t m = mask_of(gate.targets);
            for (std::uint64_t i = 0; i < n; ++i) {
                if ((i & m) == 0) {
                    dense_[i] = -dense_[i];
                }
            }
            return;
        }
        case GateKind::Peres: {
            const Qubit a = gate.targets[0], b = gate.targets[1], c = gate.targets[2];
            controlled_flip_dense(dense_, bit(a) | bit(b), bit(c));
            controlled_flip_dense(dense_, bit(a), bit(b));
            return;
        }
        case GateKind::PeresDagger: {
            const Qubit a = gate.targets[0], b = gate.targets[1], c = gate.targets[2];
            controlled_flip_dense(dense_, bit(a), bit(b));
            controlled_flip_dense(dense_, bit(a) | bit(b), bit(c));
            return;
        }
        default:
            controlled_flip_dense(dense_, mask_of(gate.controls), bit(gate.targets[0]));
            return;
    }
}

void StateVector::apply_sparse(const Gate &gate) {
    if (gate.kind == GateKind::H) {
        hadamard_sparse(bit(gate.targets[0]));
        return;
    }
    if (gate.kind == GateKind::PhaseFlipZero) {
        const std::uint64_t m = mask_of(gate.targets);
        for (Entry &e : entries_) {
            if ((e.index & m) == 0) {
                e.amp = -e.amp;
            }
        }
        return;
    }
    // A permutation maps distinct indices to distinct indices, so entries can be
    // relabelled in place.
    const IndexPermutation perm(gate);
    for (Entry &e : entries_) {
        e.index = perm(e.index);
    }
}

void StateVector::hadamard_sparse(std::uint64_t t) {
    std::sort(entries_.begin(), entries_.end(), [t](const Entry &x, const Entry &y) {
        std::uint64_t bx = x.index & ~t, by = y.index & ~t;
        return bx != by ? bx < by : x.index < y.index;
    });
    std::vector<Entry> out;
    out.reserve(entries_.size() * 2);
    std::size_t k = 0;
    while (k < entries_.size()) {
        const std::uint64_t base = entries_[k].index & ~t;
        Amplitude a0{}, a1{};
        while (k < entries_.size() && (entries_[k].index & ~t) == base) {
            (entries_[k].index & t ? a1 : a0) = entries_[k].amp;
            ++k;
        }
        Amplitude n0 = (a0 + a1) * kInvSqrt2;
        Amplitude n1 = (a0 - a1) * kInvSqrt2;
        if (n0 != Amplitude{}) {
            out.push_back({base, n0});
        }
        if (n1 != Amplitude{}) {
            out.push_back({base | t, n1});
        }
    }
    entries_ = std::move(out);
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for_each_nonzero([&](std::uint64_t, Amplitude a) { total += std::norm(a); });
    return total;
}

double StateVector::probability_outside(std::uint64_t mask) const {
    double total = 0.0;
    for_each_nonzero([&](std::uint64_t i, Amplitude a) {
        if (i & mask) {
            total += std::norm(a);
        }
    });
    return total;
}

std::uint64_t StateVector::sample(RandomStream &rng) const {
    const double total = norm_squared();
    if (std::abs(total - 1.0) > 1e-6) {
        throw IntegrityError("cannot sample: state norm^2 is " + std::to_string(total));
    }
    const double u = rng.uniform_real();
    double acc = 0.0;
    std::uint64_t chosen = 0;
    bool done = false;
    for_each_nonzero([&](std::uint64_t i, Amplitude a) {
        if (done) {
            return;
        }
        chosen = i;
        acc += std::norm(a);
        if (u < acc) {
            done = true;
        }
    });
    return chosen;
}

}  // namespace qmax
