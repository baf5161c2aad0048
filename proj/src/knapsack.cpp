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

#include "qmax/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qmax/errors.hpp"
#include "qmax/rng.hpp"

namespace qmax {

std::uint64_t KnapsackInstance::total_weight() const {
    std::uint64_t s = 0;
    for (const Item &it : items) {
        s += it.weight;
    }
    return s;
}

std::uint64_t KnapsackInstance::total_value() const {
    std::uint64_t s = 0;
    for (const Item &it : items) {
        s += it.value;
    }
    return s;
}

void KnapsackInstance::validate() const {
    if (items.empty()) {
        throw std::invalid_argument("instance has no items");
    }
    if (items.size() > kMaxItems) {
        throw std::invalid_argument(
            "instance has " + std::to_string(items.size()) + " items; at most " + std::to_string(kMaxItems) +
            " are supported");
    }
    // Keeps every register comfortably inside a 64-bit basis index.
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 40;
    if (total_weight() >= kLimit || total_value() >= kLimit || capacity >= kLimit) {
        throw std::invalid_argument("instance weights, values or capacity are too large");
    }
}

bool candidate_has_item(std::uint64_t candidate, std::size_t n_items, std::size_t item) {
    return (candidate >> (n_items - 1 - item)) & 1;
}

std::string format_candidate(std::uint64_t candidate, std::size_t n_items) {
    std::string s(n_items, '0');
    for (std::size_t k = 0; k < n_items; ++k) {
        if (candidate_has_item(candidate, n_items, k)) {
            s[k] = '1';
        }
    }
    return s;
}

std::uint64_t parse_candidate(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("candidate bitstring must have 1 to 63 characters");
    }
    std::uint64_t c = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("candidate bitstring may only contain 0 and 1");
        }
        c = (c << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return c;
}

std::uint64_t RegisterPlan::work_mask() const {
    return w.mask() | g.mask() | f.mask() | (std::uint64_t{1} << v);
}

RegisterPlan plan_registers(const KnapsackInstance &instance, unsigned qubit_cap) {
    instance.validate();
    const auto n = static_cast<unsigned>(instance.size());
    const unsigned w_width = std::max(1u, static_cast<unsigned>(std::bit_width(instance.total_weight())));
    const unsigned f_width = std::max(2u, static_cast<unsigned>(std::bit_width(instance.total_value())) + 1);
    const unsigned g_width = std::max(w_width, f_width);

    RegisterPlan plan;
    Qubit next = 0;
    plan.q = RegisterRef("q", next, n);
    next += n;
    plan.w = RegisterRef("w", next, w_width);
    next += w_width;
    plan.g = RegisterRef("g", next, g_width);
    next += g_width;
    plan.f = RegisterRef("f", next, f_width);
    next += f_width;
    plan.v = next++;
    plan.r = next++;
    plan.total_qubits = next;

    const unsigned cap = std::min(qubit_cap, StateVector::kMaxQubits);
    if (plan.total_qubits > cap) {
        throw CapacityError(
            "instance needs " + std::to_string(plan.total_qubits) + " qubits, above the qubit cap of " +
                std::to_string(cap),
            plan.total_qubits, cap);
    }
    return plan;
}

CandidateEvaluation classical_evaluate(const KnapsackInstance &instance, std::uint64_t candidate) {
    CandidateEvaluation ev;
    ev.candidate = candidate;
    const std::size_t n = instance.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (candidate_has_item(candidate, n, k)) {
            ev.weight += instance.items[k].weight;
            ev.fitness += static_cast<std::int64_t>(instance.items[k].value);
        }
    }
    ev.valid = ev.weight <= instance.capacity;
    return ev;
}

CandidateEvaluation classical_max(const KnapsackInstance &instance) {
    instance.validate();
    // The empty selection is always valid, so it seeds the search.
    CandidateEvaluation best = classical_evaluate(instance, 0);
    for (std::uint64_t c = 1; c < instance.candidate_count(); ++c) {
        CandidateEvaluation ev = classical_evaluate(instance, c);
        if (ev.valid && ev.fitness > best.fitness) {
            best = ev;
        }
    }
    return best;
}

GateSequence compile_evaluation(const KnapsackInstance &instance, const RegisterPlan &plan) {
    const std::size_t n = instance.size();
    const RegisterRef g_weight = plan.g.slice(0, plan.w.width);
    const RegisterRef g_value = plan.g.slice(0, plan.f.width);
    GateSequence s;

    for (std::size_t k = 0; k < n; ++k) {
        const GateSequence load = build_load_constant(instance.items[k].weight, g_weight);
        s.append(load);
        s.append(build_controlled_modular_adder(plan.item_qubit(k), g_weight, plan.w));
        s.append(load);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const GateSequence load = build_load_constant(instance.items[k].value, g_value);
        s.append(load);
        s.append(build_controlled_modular_adder(plan.item_qubit(k), g_value, plan.f));
        s.append(load);
    }

    // No weight exceeds 2^|w| - 1, so clamping the capacity there keeps the
    // comparison outcome unchanged.
    const std::uint64_t w_max = (std::uint64_t{1} << plan.w.width) - 1;
    const GateSequence load_cap = build_load_constant(std::min(instance.capacity, w_max), g_weight);
    s.append(load_cap);
    s.append(build_comparator(g_weight, plan.w, plan.v));
    s.append(load_cap);

    s.append(build_controlled_negate(plan.v, plan.f));
    return s;
}

GateSequence compile_marking(const RegisterPlan &plan, std::int64_t threshold) {
    if (!fits_signed(threshold, plan.f.width)) {
        throw std::invalid_argument(
            "threshold " + std::to_string(threshold) + " does not fit a " + std::to_string(plan.f.width) +
            "-bit signed fitness register");
    }
    const RegisterRef g_value = plan.g.slice(0, plan.f.width);
    const GateSequence load = build_load_constant(encode_signed(threshold, plan.f.width), g_value);
    GateSequence s = load;
    s.append(build_signed_comparator(g_value, plan.f, plan.r));
    s.append(load);
    return s;
}

OracleCircuit compile_oracle(const KnapsackInstance &instance, const RegisterPlan &plan, std::int64_t threshold) {
    OracleCircuit oracle;
    oracle.mark = compile_marking(plan, threshold);
    oracle.prepare = compile_evaluation(instance, plan);
    oracle.unprepare = oracle.prepare.reverse();
    oracle.q_register = plan.q;
    oracle.kickback = plan.r;
    oracle.work_mask = plan.work_mask();
    oracle.num_qubits = plan.total_qubits;
    return oracle;
}

std::vector<CandidateEvaluation> enumerate_table(const KnapsackInstance &instance, unsigned qubit_cap) {
    const RegisterPlan plan = plan_registers(instance, qubit_cap);
    const GateSequence evaluation = compile_evaluation(instance, plan);
    StateVector state(plan.total_qubits, qubit_cap);
    const std::uint64_t v_bit = std::uint64_t{1} << plan.v;

    std::vector<CandidateEvaluation> rows;
    rows.reserve(instance.candidate_count());
    for (std::uint64_t c = 0; c < instance.candidate_count(); ++c) {
        state.set_basis_state(plan.q.deposit(0, c));
        state.apply(evaluation);

        std::uint64_t basis = 0;
        double prob = 0.0;
        std::size_t support = 0;
        state.for_each_nonzero([&](std::uint64_t i, Amplitude a) {
            basis = i;
            prob = std::norm(a);
            ++support;
        });
        if (support != 1 || std::abs(prob - 1.0) > 1e-10) {
            throw IntegrityError("evaluation circuit did not produce a basis state for candidate " +
                                 format_candidate(c, instance.size()));
        }

        CandidateEvaluation row;
        row.candidate = plan.q.extract(basis);
        row.weight = plan.w.extract(basis);
        row.valid = (basis & v_bit) == 0;
        const std::int64_t f = decode_signed(plan.f.extract(basis), plan.f.width);
        row.fitness = row.valid ? f : -f;
        rows.push_back(row);
    }
    return rows;
}

SearchTrace maximize(const KnapsackInstance &instance, const MaximizeConfig &config) {
    const RegisterPlan plan = plan_registers(instance, config.qubit_cap);
    const std::uint64_t n_candidates = instance.candidate_count();
    const std::size_t max_steps = config.max_steps ? config.max_steps : default_max_steps(n_candidates);

    RandomStream threshold_rng(config.seed, StreamId::Threshold);
    RandomStream schedule_rng(config.seed, StreamId::Schedule);
    RandomStream measure_rng(config.seed, StreamId::Measurement);

    SearchTrace trace;
    trace.n_items = instance.size();
    std::int64_t threshold = 0;
    if (config.initial_threshold) {
        threshold = *config.initial_threshold;
        if (!fits_signed(threshold, plan.f.width)) {
            throw std::invalid_argument(
                "initial threshold " + std::to_string(threshold) + " does not fit the " +
                std::to_string(plan.f.width) + "-bit fitness register");
        }
    } else {
        const CandidateEvaluation start = classical_evaluate(instance, threshold_rng.uniform_index(n_candidates));
        trace.final_candidate = start.valid ? start.candidate : 0;
        threshold = start.valid ? start.fitness : 0;
    }
    trace.initial_threshold = threshold;

    StateVector state(plan.total_qubits, config.qubit_cap);
    unsigned exhausted_in_a_row = 0;
    trace.stop = StopReason::MaxRounds;
    for (std::size_t round = 1; round <= config.max_rounds; ++round) {
        trace.rounds = round;
        const OracleCircuit oracle = compile_oracle(instance, plan, threshold);
        auto accept = [&](std::uint64_t c) {
            const CandidateEvaluation ev = classical_evaluate(instance, c);
            return ev.valid && ev.fitness > threshold;
        };
        const BoyerResult result = boyer_search(state, oracle, accept, BoyerSchedule(n_candidates, config.lambda),
                                                schedule_rng, measure_rng, max_steps);

        for (const BoyerStep &step : result.steps) {
            const CandidateEvaluation ev = classical_evaluate(instance, step.measured);
            TraceStep ts;
            ts.round = round;
            ts.m = step.m;
            ts.j = step.j;
            ts.grover_iterations_cumulative = trace.total_grover_iterations + step.grover_iterations_cumulative;
            ts.measured_candidate = step.measured;
            ts.measured_fitness = ev.fitness;
            ts.valid = ev.valid;
            ts.accepted = step.accepted;
            ts.threshold_after = step.accepted ? ev.fitness : threshold;
            trace.steps.push_back(ts);
        }
        trace.total_grover_iterations += result.grover_iterations;

        if (result.found) {
            threshold = classical_evaluate(instance, *result.found).fitness;
            trace.final_candidate = *result.found;
            exhausted_in_a_row = 0;
        } else if (++exhausted_in_a_row >= std::max(1u, config.confirmations)) {
            trace.stop = StopReason::Exhausted;
            break;
        }
    }
    trace.final_fitness = threshold;
    return trace;
}

ResourceEstimate estimate_resources(const KnapsackInstance &instance) {
    const RegisterPlan plan = plan_registers(instance, StateVector::kMaxQubits);
    const OracleCircuit oracle = compile_oracle(instance, plan, -1);
    GateSequence all = oracle.full();
    all.append(build_diffusion(plan.q));

    ResourceEstimate est;
    est.qubits = plan.total_qubits;
    est.gate_counts = all.count_by_kind();
    est.total_gates = all.size();
    auto mcx_cost = [](std::size_t controls) -> std::uint64_t { return controls >= 2 ? 2 * controls - 3 : 0; };
    for (const Gate &g : all) {
        switch (g.kind) {
            case GateKind::Toffoli:
            case GateKind::Peres:
            case GateKind::PeresDagger:
                est.toffoli_equivalent += 1;
                break;
            case GateKind::MCX:
                est.toffoli_equivalent += mcx_cost(g.controls.size());
                break;
            case GateKind::PhaseFlipZero:
                est.toffoli_equivalent += mcx_cost(g.targets.size() - 1);
                break;
            default:
                break;
        }
    }
    est.grover_iterations_expected = iteration_count(instance.candidate_count(), 1);
    return est;
}

}  // namespace qmax
