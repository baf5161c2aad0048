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

#ifndef QMAX_STATEVECTOR_HPP
#define QMAX_STATEVECTOR_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "qmax/gate.hpp"
#include "qmax/rng.hpp"

namespace qmax {

using Amplitude = std::complex<double>;

/// Statevector over 2^Q basis states. Qubit k is bit k of the basis index.
///
/// Storage is adaptive by default: while few basis states carry amplitude (as is
/// the case for reversible oracles acting on a register superposition) the state
/// keeps an exact list of (index, amplitude) entries. Once that list would cover
/// more than 1/8 of the basis it switches permanently to a dense 2^Q array.
/// Storage::Dense forces the array from the start. Both representations give
/// bit-identical results for permutation and phase gates.
class StateVector {
   public:
    static constexpr unsigned kDefaultQubitCap = 26;
    /// Basis indices are 64-bit; the cap may not be raised above this.
    static constexpr unsigned kMaxQubits = 62;

    enum class Storage : std::uint8_t { Adaptive, Dense };

    /// |0...0> on num_qubits qubits. Throws std::invalid_argument for 0 qubits and
    /// CapacityError when num_qubits > qubit_cap.
    explicit StateVector(unsigned num_qubits, unsigned qubit_cap = kDefaultQubitCap,
                         Storage storage = Storage::Adaptive);

    unsigned num_qubits() const noexcept {
        return num_qubits_;
    }
    std::uint64_t dimension() const noexcept {
        return std::uint64_t{1} << num_qubits_;
    }
    bool is_dense() const noexcept {
        return dense_mode_;
    }

    /// Throws std::invalid_argument when basis >= dimension().
    Amplitude amplitude(std::uint64_t basis) const;

    /// Full amplitude array. Materializes 2^Q values even in sparse mode.
    std::vector<Amplitude> amplitudes() const;

    /// Replaces the state by the basis state |basis>.
    void set_basis_state(std::uint64_t basis);
    void reset() {
        set_basis_state(0);
    }

    void apply(const Gate &gate);

    /// Validates every gate first, so an invalid sequence leaves the state untouched.
    /// Errors name the offending gate position.
    void apply(const GateSequence &seq);

    double norm_squared() const;

    /// Total probability of basis states having any bit of `mask` set.
    double probability_outside(std::uint64_t mask) const;

    /// Draws a basis index with probability |amplitude|^2. Does not collapse.
    /// Throws IntegrityError when the norm deviates from 1 by more than 1e-6.
    std::uint64_t sample(RandomStream &rng) const;

    /// Calls fn(index, amplitude) for every nonzero amplitude in ascending index order.
    template <class Fn>
    void for_each_nonzero(Fn &&fn) const {
        if (dense_mode_) {
            for (std::uint64_t i = 0; i < dense_.size(); ++i) {
                if (dense_[i] != Amplitude{}) {
                    fn(i, dense_[i]);
                }
            }
            return;
        }
        std::vector<Entry> sorted = entries_;
        std::sort(sorted.begin(), sorted.end(), [](const Entry &a, const Entry &b) { return a.index < b.index; });
        for (const Entry &e : sorted) {
            if (e.amp != Amplitude{}) {
                fn(e.index, e.amp);
            }
        }
    }

   private:
    struct Entry {
        std::uint64_t index;
        Amplitude amp;
    };

    void densify();
    void maybe_densify();
    void apply_unchecked(const Gate &gate);
    void apply_dense(const Gate &gate);
    void apply_sparse(const Gate &gate);
    void hadamard_sparse(std::uint64_t bit);

    unsigned num_qubits_;
    bool dense_mode_ = false;
    std::vector<Amplitude> dense_;
    std::vector<Entry> entries_;
};

/// Short names for the basic operations.
inline StateVector new_zero_state(unsigned num_qubits, unsigned qubit_cap = StateVector::kDefaultQubitCap) {
    return StateVector(num_qubits, qubit_cap);
}
inline std::uint64_t measure_all(const StateVector &state, RandomStream &rng) {
    return state.sample(rng);
}

}  // namespace qmax

#endif
