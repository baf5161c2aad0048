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

#include "qmax/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qmax/errors.hpp"

namespace qmax {

GateSequence OracleCircuit::full() const {
    GateSequence s = prepare;
    s.append(mark);
    s.append(unprepare);
    return s;
}

GateSequence build_diffusion(const RegisterRef &q) {
    GateSequence s;
    std::vector<Qubit> all;
    for (unsigned i = 0; i < q.width; ++i) {
        s.push_back(Gate::h(q.qubit(i)));
        all.push_back(q.qubit(i));
    }
    s.push_back(Gate::phase_flip_zero(std::move(all)));
    for (unsigned i = 0; i < q.width; ++i) {
        s.push_back(Gate::h(q.qubit(i)));
    }
    return s;
}

GateSequence build_search_preparation(const RegisterRef &q, Qubit kickback) {
    if (q.contains(kickback)) {
        throw std::invalid_argument("kickback qubit lies inside the candidate register");
    }
    GateSequence s;
    for (unsigned i = 0; i < q.width; ++i) {
        s.push_back(Gate::h(q.qubit(i)));
    }
    s.push_back(Gate::x(kickback));
    s.push_back(Gate::h(kickback));
    return s;
}

void grover_iteration(StateVector &state, const OracleCircuit &oracle, const GateSequence &diffusion) {
    state.apply(oracle.prepare);
    state.apply(oracle.mark);
    state.apply(oracle.unprepare);
    const double leaked = state.probability_outside(oracle.work_mask);
    if (leaked > 1e-12) {
        throw IntegrityError("oracle left " + std::to_string(leaked) + " probability on dirty work qubits");
    }
    state.apply(diffusion);
}

std::vector<Amplitude> candidate_amplitudes(const StateVector &state, const OracleCircuit &oracle) {
    const RegisterRef &q = oracle.q_register;
    const std::uint64_t r = std::uint64_t{1} << oracle.kickback;
    std::vector<Amplitude> out(std::uint64_t{1} << q.width);
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        const std::uint64_t base = q.deposit(0, i);
        out[i] = (state.amplitude(base) - state.amplitude(base | r)) * std::numbers::sqrt2 / 2.0;
    }
    return out;
}

std::uint64_t iteration_count(std::uint64_t n_items, std::uint64_t n_solutions) {
    if (n_solutions == 0 || n_solutions > n_items) {
        throw std::invalid_argument(
            "iteration count needs 1 <= M <= N, got N=" + std::to_string(n_items) +
            " M=" + std::to_string(n_solutions));
    }
    const double k = std::numbers::pi / 4.0 *
                     std::sqrt(static_cast<double>(n_items) / static_cast<double>(n_solutions));
    return static_cast<std::uint64_t>(std::ceil(k));
}

BoyerSchedule::BoyerSchedule(std::uint64_t n_items, double lambda_)
    : lambda(lambda_), sqrt_n_cap(std::sqrt(static_cast<double>(n_items))) {
    if (n_items == 0) {
        throw std::invalid_argument("search space is empty");
    }
    if (!(lambda > 1.0)) {
        throw std::invalid_argument("schedule growth factor must exceed 1");
    }
}

std::uint64_t BoyerSchedule::draw_iterations(RandomStream &rng) const {
    const auto bound = static_cast<std::uint64_t>(std::ceil(m));
    return rng.uniform_index(std::max<std::uint64_t>(bound, 1));
}

void BoyerSchedule::grow() {
    m = std::min(lambda * m, sqrt_n_cap);
}

std::size_t default_max_steps(std::uint64_t n_items) {
    return 3 * static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_items))));
}

BoyerResult boyer_search(StateVector &state, const OracleCircuit &oracle,
                         const std::function<bool(std::uint64_t)> &accept, BoyerSchedule schedule,
                         RandomStream &schedule_rng, RandomStream &measure_rng, std::size_t max_steps) {
    const GateSequence preparation = build_search_preparation(oracle.q_register, oracle.kickback);
    const GateSequence diffusion = build_diffusion(oracle.q_register);
    BoyerResult result;
    for (std::size_t step = 0; step < max_steps; ++step) {
        BoyerStep record;
        record.m = schedule.m;
        record.j = schedule.draw_iterations(schedule_rng);

        state.reset();
        state.apply(preparation);
        for (std::uint64_t k = 0; k < record.j; ++k) {
            grover_iteration(state, oracle, diffusion);
        }
        result.grover_iterations += record.j;
        record.grover_iterations_cumulative = result.grover_iterations;
        record.measured = oracle.q_register.extract(state.sample(measure_rng));
        record.accepted = accept(record.measured);
        result.steps.push_back(record);
        if (record.accepted) {
            result.found = record.measured;
            return result;
        }
        schedule.grow();
    }
    return result;
}

}  // namespace qmax
