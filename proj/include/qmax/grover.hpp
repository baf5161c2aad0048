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

#ifndef QMAX_GROVER_HPP
#define QMAX_GROVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qmax/arithmetic.hpp"
#include "qmax/gate.hpp"
#include "qmax/rng.hpp"
#include "qmax/statevector.hpp"

namespace qmax {

/// A phase oracle realized by phase kickback. With the candidate register in any
/// state, work qubits |0...0> and the kickback qubit in |->, running
/// prepare, mark, unprepare multiplies each candidate |i> by (-1)^o(i) and
/// returns every work qubit to |0>.
struct OracleCircuit {
    GateSequence prepare;
    GateSequence mark;
    GateSequence unprepare;
    RegisterRef q_register;
    Qubit kickback = 0;
    /// Qubits other than q and kickback; they must be |0> between oracle calls.
    std::uint64_t work_mask = 0;
    unsigned num_qubits = 0;

    /// prepare, mark, unprepare as one sequence.
    GateSequence full() const;
};

/// H^n, phase flip on |0...0>, H^n over q. Maps amplitudes a_i of the q subspace
/// to a_i - 2<a>, i.e. inversion about the mean times a global -1.
GateSequence build_diffusion(const RegisterRef &q);

/// Uniform superposition over q and |-> on the kickback qubit, from |0...0>.
GateSequence build_search_preparation(const RegisterRef &q, Qubit kickback);

/// One oracle call followed by diffusion. Throws IntegrityError if more than 1e-12
/// of probability ends up on basis states with a work qubit set.
void grover_iteration(StateVector &state, const OracleCircuit &oracle, const GateSequence &diffusion);

/// Candidate-register amplitudes with the kickback qubit projected on |-> and the
/// work qubits on |0>. Index i of the result is candidate i.
std::vector<Amplitude> candidate_amplitudes(const StateVector &state, const OracleCircuit &oracle);

/// ceil((pi/4) sqrt(N/M)). Throws std::invalid_argument unless 1 <= M <= N.
std::uint64_t iteration_count(std::uint64_t n_items, std::uint64_t n_solutions);

/// Cutoff schedule for search with an unknown number of solutions.
struct BoyerSchedule {
    static constexpr double kDefaultLambda = 6.0 / 5.0;

    double m = 1.0;
    double lambda = kDefaultLambda;
    double sqrt_n_cap = 1.0;

    explicit BoyerSchedule(std::uint64_t n_items, double lambda_ = kDefaultLambda);

    /// j uniform in [0, ceil(m)).
    std::uint64_t draw_iterations(RandomStream &rng) const;
    /// m <- min(lambda m, sqrt(N)).
    void grow();
};

/// 3 * ceil(sqrt(N)).
std::size_t default_max_steps(std::uint64_t n_items);

struct BoyerStep {
    double m = 0.0;
    std::uint64_t j = 0;
    std::uint64_t grover_iterations_cumulative = 0;
    std::uint64_t measured = 0;
    bool accepted = false;
};

struct BoyerResult {
    std::optional<std::uint64_t> found;
    std::vector<BoyerStep> steps;
    std::uint64_t grover_iterations = 0;
};

/// Randomized search when the number of marked candidates is unknown. Each step
/// re-prepares `state`, applies j Grover iterations, samples the candidate register
/// and asks `accept` whether the outcome qualifies. Returns the first accepted
/// candidate, or no candidate after max_steps measurements.
BoyerResult boyer_search(StateVector &state, const OracleCircuit &oracle,
                         const std::function<bool(std::uint64_t)> &accept, BoyerSchedule schedule,
                         RandomStream &schedule_rng, RandomStream &measure_rng, std::size_t max_steps);

}  // namespace qmax

#endif
