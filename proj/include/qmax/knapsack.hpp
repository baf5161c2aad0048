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

#ifndef QMAX_KNAPSACK_HPP
#define QMAX_KNAPSACK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmax/arithmetic.hpp"
#include "qmax/gate.hpp"
#include "qmax/grover.hpp"
#include "qmax/statevector.hpp"

namespace qmax {

struct Item {
    std::uint64_t weight = 0;
    std::uint64_t value = 0;

    bool operator==(const Item &) const = default;
};

/// 0/1 knapsack problem: pick a subset of items with total weight <= capacity
/// maximizing total value.
struct KnapsackInstance {
    static constexpr std::size_t kMaxItems = 12;

    std::vector<Item> items;
    std::uint64_t capacity = 0;

    std::size_t size() const noexcept {
        return items.size();
    }
    /// 2^n.
    std::uint64_t candidate_count() const noexcept {
        return std::uint64_t{1} << items.size();
    }
    std::uint64_t total_weight() const;
    std::uint64_t total_value() const;

    /// Throws std::invalid_argument unless 1 <= n <= kMaxItems.
    void validate() const;

    bool operator==(const KnapsackInstance &) const = default;
};

// Candidates are integers in [0, 2^n). Item 1 is the most significant bit, so the
// usual written form "0111" (item 1 leftmost) is the binary numeral of the index.

bool candidate_has_item(std::uint64_t candidate, std::size_t n_items, std::size_t item);
/// Most-significant (item 1) first, n characters.
std::string format_candidate(std::uint64_t candidate, std::size_t n_items);
/// Inverse of format_candidate. Throws std::invalid_argument on bad characters.
std::uint64_t parse_candidate(std::string_view bits);

/// Register allocation for the oracle, in qubit order q, w, g, f, v, r.
struct RegisterPlan {
    RegisterRef q;  ///< candidate selection, one qubit per item
    RegisterRef w;  ///< total weight, unsigned
    RegisterRef g;  ///< scratch for loaded constants
    RegisterRef f;  ///< fitness, two's complement
    Qubit v = 0;    ///< validity flag, 1 = over capacity
    Qubit r = 0;    ///< phase kickback qubit
    unsigned total_qubits = 0;

    /// The qubit that controls item k's additions.
    Qubit item_qubit(std::size_t item) const {
        return q.qubit(q.width - 1 - static_cast<unsigned>(item));
    }
    /// w, g, f and v.
    std::uint64_t work_mask() const;
};

/// Widths: w = bits(sum weights), f = p with sum values <= 2^(p-1) - 1 (p >= 2),
/// g = max(w, f). Throws CapacityError when the total exceeds qubit_cap.
RegisterPlan plan_registers(const KnapsackInstance &instance, unsigned qubit_cap = StateVector::kDefaultQubitCap);

struct CandidateEvaluation {
    std::uint64_t candidate = 0;
    std::uint64_t weight = 0;
    /// Sum of selected values, before any negation.
    std::int64_t fitness = 0;
    bool valid = true;

    bool operator==(const CandidateEvaluation &) const = default;
};

CandidateEvaluation classical_evaluate(const KnapsackInstance &instance, std::uint64_t candidate);

/// Brute force over all 2^n candidates. Ties go to the smallest candidate index.
CandidateEvaluation classical_max(const KnapsackInstance &instance);

/// The weight, fitness, validity and negation stages: leaves w = weight,
/// f = fitness (negated when invalid), v = [capacity < weight], g = 0.
GateSequence compile_evaluation(const KnapsackInstance &instance, const RegisterPlan &plan);

/// Loads the threshold into g, flips r when threshold < f (signed), unloads.
GateSequence compile_marking(const RegisterPlan &plan, std::int64_t threshold);

/// Full dynamic oracle for `threshold`. Throws std::invalid_argument when the
/// threshold does not fit the signed fitness register.
OracleCircuit compile_oracle(const KnapsackInstance &instance, const RegisterPlan &plan, std::int64_t threshold);

/// All 2^n rows computed by simulating the evaluation circuit on each basis
/// candidate and reading w, f and v back from the resulting basis state.
std::vector<CandidateEvaluation> enumerate_table(const KnapsackInstance &instance,
                                                 unsigned qubit_cap = StateVector::kDefaultQubitCap);

struct MaximizeConfig {
    std::uint64_t seed = 1;
    std::size_t max_rounds = 64;
    std::optional<std::int64_t> initial_threshold;
    /// Consecutive exhausted searches at one threshold before stopping.
    unsigned confirmations = 1;
    unsigned qubit_cap = StateVector::kDefaultQubitCap;
    /// Measurements per search; 0 selects default_max_steps(2^n).
    std::size_t max_steps = 0;
    double lambda = BoyerSchedule::kDefaultLambda;
};

struct TraceStep {
    std::size_t round = 0;
    double m = 0.0;
    std::uint64_t j = 0;
    std::uint64_t grover_iterations_cumulative = 0;
    std::uint64_t measured_candidate = 0;
    std::int64_t measured_fitness = 0;
    bool valid = false;
    bool accepted = false;
    std::int64_t threshold_after = 0;
};

enum class StopReason : std::uint8_t { Exhausted, MaxRounds };

struct SearchTrace {
    std::size_t n_items = 0;
    std::int64_t initial_threshold = 0;
    std::vector<TraceStep> steps;
    /// Unset when the run started from an explicit threshold and never improved on it.
    std::optional<std::uint64_t> final_candidate;
    std::int64_t final_fitness = 0;
    std::uint64_t total_grover_iterations = 0;
    std::size_t rounds = 0;
    StopReason stop = StopReason::Exhausted;
};

/// Threshold-raising maximization: each round searches for a valid candidate whose
/// fitness beats the current threshold, then raises the threshold to it.
SearchTrace maximize(const KnapsackInstance &instance, const MaximizeConfig &config);

struct ResourceEstimate {
    unsigned qubits = 0;
    std::map<GateKind, std::size_t> gate_counts;
    std::size_t total_gates = 0;
    /// Toffoli and Peres count 1; MCX with k controls counts 2k - 3; a phase flip
    /// on k qubits counts as an MCX with k - 1 controls; everything else 0.
    std::uint64_t toffoli_equivalent = 0;
    /// iteration_count(2^n, 1).
    std::uint64_t grover_iterations_expected = 0;
};

/// Counts one oracle plus one diffusion. The oracle uses threshold -1, whose
/// encoding sets every bit, so the count is the worst case over thresholds.
/// Purely symbolic; the qubit cap does not apply.
ResourceEstimate estimate_resources(const KnapsackInstance &instance);

}  // namespace qmax

#endif
