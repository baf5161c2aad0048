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

#include <cmath>
#include <numbers>
#include <set>

#include "gtest/gtest.h"
#include "qmax/errors.hpp"
#include "test_util.hpp"

using namespace qmax;

namespace {

/// Bare phase oracle over n candidate qubits, kickback on qubit n, no work qubits.
OracleCircuit marking_oracle(unsigned n, const std::set<std::uint64_t> &marked) {
    OracleCircuit o{{}, {}, {}, RegisterRef("q", 0, n), n, 0, n + 1};
    std::vector<Qubit> controls;
    for (unsigned i = 0; i < n; ++i) {
        controls.push_back(i);
    }
    for (std::uint64_t c : marked) {
        GateSequence flips;
        for (unsigned i = 0; i < n; ++i) {
            if (!((c >> i) & 1)) {
                flips.push_back(Gate::x(i));
            }
        }
        o.mark.append(flips);
        o.mark.push_back(Gate::mcx(controls, n));
        o.mark.append(flips);
    }
    return o;
}

/// Dense q-register amplitudes with no kickback qubit: classical reference for diffusion.
std::vector<Amplitude> q_amplitudes(const StateVector &s, unsigned n) {
    auto all = s.amplitudes();
    return {all.begin(), all.begin() + (std::ptrdiff_t{1} << n)};
}

}  // namespace

TEST(diffusion, uniform_state_is_fixed_up_to_global_phase) {
    StateVector s(4, 26, StateVector::Storage::Dense);
    GateSequence h;
    for (Qubit q = 0; q < 4; ++q) {
        h.push_back(Gate::h(q));
    }
    s.apply(h);
    s.apply(build_diffusion(RegisterRef("q", 0, 4)));
    for (auto a : s.amplitudes()) {
        EXPECT_NEAR(std::abs(a), 0.25, 1e-12);
        EXPECT_NEAR(a.real(), -0.25, 1e-12);
    }
}

TEST(diffusion, zero_state_pattern) {
    for (unsigned n = 1; n <= 5; ++n) {
        StateVector s(n);
        s.apply(build_diffusion(RegisterRef("q", 0, n)));
        const double two_over = 2.0 / static_cast<double>(1u << n);
        auto amps = s.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            // Global sign -1 times (2<a> - a_i).
            const double expected = -(two_over - (i == 0 ? 1.0 : 0.0));
            EXPECT_NEAR(amps[i].real(), expected, 1e-12) << "n=" << n << " i=" << i;
        }
    }
}

TEST(diffusion, two_marked_amplitudes) {
    // 14 amplitudes at +1/4 and two at -1/4 go to 1/8 and 5/8 in magnitude, and the
    // two marked ones share the sign of the rest.
    const unsigned n = 4;
    const OracleCircuit oracle = marking_oracle(n, {0b0110, 0b0111});
    StateVector s(n + 1);
    s.apply(build_search_preparation(oracle.q_register, oracle.kickback));
    s.apply(oracle.full());
    auto before = candidate_amplitudes(s, oracle);
    for (std::uint64_t i = 0; i < 16; ++i) {
        const double expected = (i == 6 || i == 7) ? -0.25 : 0.25;
        EXPECT_NEAR(before[i].real(), expected, 1e-12);
    }
    s.apply(build_diffusion(oracle.q_register));
    auto after = candidate_amplitudes(s, oracle);
    for (std::uint64_t i = 0; i < 16; ++i) {
        const bool marked = i == 6 || i == 7;
        EXPECT_NEAR(std::abs(after[i]), marked ? 5.0 / 8 : 1.0 / 8, 1e-12);
        EXPECT_GT(after[i].real() * after[0].real(), 0.0);
    }
}

TEST(diffusion, involution) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
        StateVector s(n, 26, StateVector::Storage::Dense);
        s.apply(fixtures::random_sequence(rng, n, 40));
        const auto before = s.amplitudes();
        const GateSequence d = build_diffusion(RegisterRef("q", 0, n));
        s.apply(d);
        s.apply(d);
        const auto after = s.amplitudes();
        for (std::size_t i = 0; i < before.size(); ++i) {
            ASSERT_LT(std::abs(before[i] - after[i]), 1e-10);
        }
    }
}

TEST(diffusion, inversion_about_mean) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
        StateVector s(n, 26, StateVector::Storage::Dense);
        s.apply(fixtures::random_sequence(rng, n, 50));
        const auto a = q_amplitudes(s, n);
        Amplitude mean = 0.0;
        for (auto x : a) {
            mean += x;
        }
        mean /= static_cast<double>(a.size());
        s.apply(build_diffusion(RegisterRef("q", 0, n)));
        const auto b = q_amplitudes(s, n);
        for (std::size_t i = 0; i < a.size(); ++i) {
            ASSERT_LT(std::abs(b[i] - (a[i] - 2.0 * mean)), 1e-10);
        }
    }
}

TEST(diffusion, acts_only_on_the_register) {
    // Qubit 0 is outside q; the diffusion must not mix its two branches.
    StateVector s(4, 26, StateVector::Storage::Dense);
    s.set_basis_state(1);
    s.apply(build_diffusion(RegisterRef("q", 1, 3)));
    s.for_each_nonzero([](std::uint64_t i, Amplitude) { EXPECT_EQ(i & 1, 1u); });
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(grover_iteration, empty_and_full_marked_sets_leave_state) {
    const unsigned n = 4;
    for (const std::set<std::uint64_t> &marked :
         {std::set<std::uint64_t>{}, std::set<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}}) {
        const OracleCircuit oracle = marking_oracle(n, marked);
        StateVector s(n + 1);
        s.apply(build_search_preparation(oracle.q_register, oracle.kickback));
        const auto before = candidate_amplitudes(s, oracle);
        grover_iteration(s, oracle, build_diffusion(oracle.q_register));
        const auto after = candidate_amplitudes(s, oracle);
        const Amplitude phase = after[0] / before[0];
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
        for (std::size_t i = 0; i < before.size(); ++i) {
            EXPECT_LT(std::abs(after[i] - phase * before[i]), 1e-12);
        }
    }
}

TEST(grover_iteration, detects_dirty_work_qubits) {
    OracleCircuit oracle = marking_oracle(2, {1});
    // Add a work qubit that the oracle forgets to clean.
    oracle.num_qubits = 4;
    oracle.work_mask = 1u << 3;
    oracle.prepare.push_back(Gate::cnot(0, 3));
    StateVector s(4);
    s.apply(build_search_preparation(oracle.q_register, oracle.kickback));
    EXPECT_THROW(grover_iteration(s, oracle, build_diffusion(oracle.q_register)), IntegrityError);
}

TEST(grover_iteration, known_count_rotation) {
    // k iterations rotate the marked probability to sin^2((2k+1) theta) with
    // sin^2 theta = M/N. At k = floor(pi / (4 theta)) it exceeds 1 - M/N.
    std::mt19937_64 rng(5);
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t N = 1u << n;
        for (std::uint64_t M = 1; M <= N / 2; M *= 2) {
            std::set<std::uint64_t> marked;
            while (marked.size() < M) {
                marked.insert(rng() % N);
            }
            const OracleCircuit oracle = marking_oracle(n, marked);
            const GateSequence d = build_diffusion(oracle.q_register);
            const double theta = std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
            const auto k_best = static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4 * theta)));
            for (std::uint64_t k : {iteration_count(N, M), k_best}) {
                StateVector s(n + 1);
                s.apply(build_search_preparation(oracle.q_register, oracle.kickback));
                for (std::uint64_t t = 0; t < k; ++t) {
                    grover_iteration(s, oracle, d);
                }
                double p = 0.0;
                const auto amps = candidate_amplitudes(s, oracle);
                for (std::uint64_t c : marked) {
                    p += std::norm(amps[c]);
                }
                const double expected = std::pow(std::sin((2.0 * static_cast<double>(k) + 1) * theta), 2);
                EXPECT_NEAR(p, expected, 1e-10) << "N=" << N << " M=" << M << " k=" << k;
                if (k == k_best) {
                    EXPECT_GE(p, 1.0 - static_cast<double>(M) / static_cast<double>(N) - 1e-12)
                        << "N=" << N << " M=" << M;
                }
            }
        }
    }
}

TEST(iteration_count, examples) {
    EXPECT_EQ(iteration_count(16, 2), 3u);
    EXPECT_EQ(iteration_count(4, 1), 2u);
    EXPECT_EQ(iteration_count(16, 16), 1u);
    EXPECT_EQ(iteration_count(16, 1), 4u);
    EXPECT_THROW(iteration_count(16, 0), std::invalid_argument);
    EXPECT_THROW(iteration_count(4, 5), std::invalid_argument);
}

TEST(schedule, monotone_and_capped) {
    for (std::uint64_t N : {1u, 2u, 16u, 1024u}) {
        BoyerSchedule s(N);
        double prev = s.m;
        EXPECT_EQ(s.m, 1.0);
        for (int i = 0; i < 100; ++i) {
            s.grow();
            EXPECT_GE(s.m, prev);
            EXPECT_LE(s.m, std::sqrt(static_cast<double>(N)) + 1e-12);
            prev = s.m;
        }
        EXPECT_NEAR(s.m, std::max(1.0, std::sqrt(static_cast<double>(N))), 1e-12);
    }
    BoyerSchedule s(16);
    s.grow();
    EXPECT_DOUBLE_EQ(s.m, 1.2);
    EXPECT_THROW(BoyerSchedule(0), std::invalid_argument);
    EXPECT_THROW(BoyerSchedule(16, 1.0), std::invalid_argument);
}

TEST(schedule, draws_below_ceiling) {
    RandomStream rng(4, StreamId::Schedule);
    BoyerSchedule s(64);
    EXPECT_EQ(s.draw_iterations(rng), 0u);  // ceil(1) = 1
    s.grow();                                // 1.2, ceil 2
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 200; ++i) {
        seen.insert(s.draw_iterations(rng));
    }
    EXPECT_EQ(seen, (std::set<std::uint64_t>{0, 1}));
    EXPECT_EQ(default_max_steps(16), 12u);
    EXPECT_EQ(default_max_steps(17), 15u);
}

TEST(boyer_search, finds_single_marked_item) {
    const unsigned n = 4;
    const std::uint64_t target = 0b1011;
    const OracleCircuit oracle = marking_oracle(n, {target});
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomStream sched(seed, StreamId::Schedule), meas(seed, StreamId::Measurement);
        StateVector s(n + 1);
        const BoyerResult r =
            boyer_search(s, oracle, [&](std::uint64_t c) { return c == target; }, BoyerSchedule(16), sched, meas, 40);
        if (r.found && *r.found == target) {
            ++successes;
        }
        ASSERT_LE(r.steps.size(), 40u);
        std::uint64_t total = 0;
        for (const auto &st : r.steps) {
            EXPECT_LT(static_cast<double>(st.j), std::ceil(st.m) + 1e-12);
            total += st.j;
            EXPECT_EQ(st.grover_iterations_cumulative, total);
        }
        EXPECT_EQ(r.grover_iterations, total);
    }
    EXPECT_GE(successes, 99);
}

TEST(boyer_search, nothing_marked_exhausts) {
    const OracleCircuit oracle = marking_oracle(3, {});
    RandomStream sched(1, StreamId::Schedule), meas(1, StreamId::Measurement);
    StateVector s(4);
    const BoyerResult r = boyer_search(s, oracle, [](std::uint64_t) { return false; }, BoyerSchedule(8), sched, meas, 9);
    EXPECT_FALSE(r.found.has_value());
    EXPECT_EQ(r.steps.size(), 9u);
    for (std::size_t i = 1; i < r.steps.size(); ++i) {
        EXPECT_GE(r.steps[i].m, r.steps[i - 1].m);
    }
}

TEST(boyer_search, zero_iteration_step_still_accepts) {
    // First step always draws j = 0, so a predicate accepting everything returns at once.
    const OracleCircuit oracle = marking_oracle(3, {});
    RandomStream sched(2, StreamId::Schedule), meas(2, StreamId::Measurement);
    StateVector s(4);
    const BoyerResult r = boyer_search(s, oracle, [](std::uint64_t) { return true; }, BoyerSchedule(8), sched, meas, 5);
    ASSERT_TRUE(r.found.has_value());
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_EQ(r.steps[0].j, 0u);
    EXPECT_EQ(r.grover_iterations, 0u);
}
