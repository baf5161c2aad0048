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

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "qmax/errors.hpp"
#include "test_util.hpp"

using namespace qmax;
using qmax::fixtures::random_sequence;

namespace {

StateVector::Storage kBoth[] = {StateVector::Storage::Adaptive, StateVector::Storage::Dense};

void expect_states_near(const StateVector &a, const StateVector &b, double tol) {
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        ASSERT_LT(std::abs(x[i] - y[i]), tol) << "basis " << i;
    }
}

}  // namespace

TEST(statevector, zero_state) {
    StateVector one(1);
    EXPECT_EQ(one.amplitudes(), (std::vector<Amplitude>{1.0, 0.0}));

    StateVector three(3);
    auto amps = three.amplitudes();
    ASSERT_EQ(amps.size(), 8u);
    EXPECT_EQ(amps[0], Amplitude(1.0));
    for (std::size_t i = 1; i < 8; ++i) {
        EXPECT_EQ(amps[i], Amplitude(0.0));
    }
}

TEST(statevector, qubit_cap) {
    EXPECT_NO_THROW(StateVector(26));
    try {
        StateVector s(27);
        FAIL() << "expected CapacityError";
    } catch (const CapacityError &e) {
        EXPECT_EQ(e.cap(), 26u);
        EXPECT_EQ(e.requested(), 27u);
        EXPECT_NE(std::string(e.what()).find("26"), std::string::npos);
    }
    EXPECT_NO_THROW(StateVector(27, 30));
    EXPECT_THROW(StateVector(0), std::invalid_argument);
}

TEST(statevector, amplitude_access) {
    StateVector s(1);
    EXPECT_EQ(s.amplitude(0), Amplitude(1.0, 0.0));
    EXPECT_EQ(s.amplitude(1), Amplitude(0.0));
    EXPECT_THROW(s.amplitude(2), std::invalid_argument);
}

TEST(statevector, hadamard) {
    for (auto storage : kBoth) {
        StateVector s(1, 26, storage);
        s.apply(Gate::h(0));
        EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-15);
        EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-15);
    }
}

TEST(statevector, hadamard_layer_is_uniform) {
    for (auto storage : kBoth) {
        StateVector s(4, 26, storage);
        GateSequence seq;
        for (Qubit q = 0; q < 4; ++q) {
            seq.push_back(Gate::h(q));
        }
        s.apply(seq);
        for (auto a : s.amplitudes()) {
            EXPECT_NEAR(a.real(), 0.25, 1e-15);
            EXPECT_EQ(a.imag(), 0.0);
        }
    }
}

TEST(statevector, toffoli_on_110) {
    StateVector s(3);
    s.set_basis_state(0b110);
    s.apply(Gate::toffoli(2, 1, 0));
    EXPECT_EQ(s.amplitude(0b111), Amplitude(1.0));
}

TEST(statevector, peres_truth_table) {
    // (a, b, c) -> (a, a^b, ab^c) with a, b, c on qubits 0, 1, 2.
    for (std::uint64_t in = 0; in < 8; ++in) {
        const unsigned a = in & 1, b = (in >> 1) & 1, c = (in >> 2) & 1;
        const std::uint64_t expected = a | ((a ^ b) << 1) | (((a & b) ^ c) << 2);
        EXPECT_EQ(fixtures::run_basis(GateSequence({Gate::peres(0, 1, 2)}), 3, in), expected) << in;
    }
    // The example (1,1,0) -> (1,0,1).
    EXPECT_EQ(fixtures::run_basis(GateSequence({Gate::peres(0, 1, 2)}), 3, 0b011), 0b101u);
}

TEST(statevector, peres_equals_toffoli_then_cnot) {
    GateSequence decomposed({Gate::toffoli(0, 1, 2), Gate::cnot(0, 1)});
    GateSequence dagger({Gate::cnot(0, 1), Gate::toffoli(0, 1, 2)});
    for (std::uint64_t in = 0; in < 8; ++in) {
        EXPECT_EQ(fixtures::run_basis(GateSequence({Gate::peres(0, 1, 2)}), 3, in),
                  fixtures::run_basis(decomposed, 3, in));
        EXPECT_EQ(fixtures::run_basis(GateSequence({Gate::peres(0, 1, 2).inverse()}), 3, in),
                  fixtures::run_basis(dagger, 3, in));
    }
}

TEST(statevector, phase_flip_zero) {
    StateVector s(2, 26, StateVector::Storage::Dense);
    s.apply(Gate::h(0));
    s.apply(Gate::h(1));
    s.apply(Gate::phase_flip_zero({0}));
    EXPECT_NEAR(s.amplitude(0).real(), -0.5, 1e-15);
    EXPECT_NEAR(s.amplitude(1).real(), 0.5, 1e-15);
    EXPECT_NEAR(s.amplitude(2).real(), -0.5, 1e-15);
    EXPECT_NEAR(s.amplitude(3).real(), 0.5, 1e-15);
}

TEST(statevector, invalid_gates_rejected) {
    StateVector s(3);
    EXPECT_THROW(s.apply(Gate::x(3)), std::invalid_argument);
    EXPECT_THROW(s.apply(Gate::cnot(1, 1)), std::invalid_argument);
    EXPECT_THROW(s.apply(Gate{GateKind::Peres, {}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(s.apply(Gate::phase_flip_zero({})), std::invalid_argument);
    EXPECT_THROW(s.apply(Gate{GateKind::MCX, {}, {0}}), std::invalid_argument);
}

TEST(statevector, sequence_error_names_position_and_leaves_state) {
    StateVector s(2);
    GateSequence seq({Gate::x(0), Gate::h(1), Gate::cnot(0, 5)});
    try {
        s.apply(seq);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("gate #2"), std::string::npos) << e.what();
    }
    EXPECT_EQ(s.amplitude(0), Amplitude(1.0));
}

TEST(statevector, empty_sequence_is_identity) {
    StateVector s(3);
    s.set_basis_state(5);
    s.apply(GateSequence{});
    EXPECT_EQ(s.amplitude(5), Amplitude(1.0));
}

TEST(statevector, random_sequences_are_reversible_and_norm_preserving) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
        const GateSequence seq = random_sequence(rng, n, 1 + rng() % 200);
        for (auto storage : kBoth) {
            StateVector s(n, 26, storage);
            s.set_basis_state(rng() % s.dimension());
            s.apply(Gate::h(0));
            const StateVector before = s;
            s.apply(seq);
            EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
            s.apply(seq.reverse());
            expect_states_near(s, before, 1e-10);
        }
    }
}

TEST(statevector, adaptive_and_dense_agree) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 3 + static_cast<unsigned>(rng() % 8);
        const GateSequence seq = random_sequence(rng, n, 1 + rng() % 150);
        StateVector sparse(n);
        StateVector dense(n, 26, StateVector::Storage::Dense);
        sparse.apply(seq);
        dense.apply(seq);
        expect_states_near(sparse, dense, 1e-12);
    }
}

TEST(statevector, permutations_preserve_amplitude_multiset) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 3 + static_cast<unsigned>(rng() % 6);
        StateVector s(n, 26, StateVector::Storage::Dense);
        s.apply(random_sequence(rng, n, 30));  // arbitrary starting state
        auto mags = [](const StateVector &st) {
            std::vector<double> m;
            for (auto a : st.amplitudes()) {
                m.push_back(std::abs(a));
            }
            std::sort(m.begin(), m.end());
            return m;
        };
        const auto before = mags(s);
        s.apply(random_sequence(rng, n, 100, true));
        const auto after = mags(s);
        for (std::size_t i = 0; i < before.size(); ++i) {
            ASSERT_NEAR(before[i], after[i], 1e-12);
        }
    }
}

TEST(statevector, sparse_state_densifies_when_spread) {
    StateVector s(6);
    EXPECT_FALSE(s.is_dense());
    s.apply(Gate::h(0));
    s.apply(Gate::h(1));
    s.apply(Gate::h(2));
    EXPECT_FALSE(s.is_dense());  // 8 of 64
    s.apply(Gate::h(3));
    EXPECT_TRUE(s.is_dense());
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(measure, basis_state_is_deterministic) {
    RandomStream rng(1, StreamId::Measurement);
    StateVector s(4);
    s.set_basis_state(5);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(measure_all(s, rng), 5u);
    }
}

TEST(measure, uniform_frequencies_within_five_sigma) {
    RandomStream rng(42, StreamId::Measurement);
    StateVector s(4);
    for (Qubit q = 0; q < 4; ++q) {
        s.apply(Gate::h(q));
    }
    std::vector<int> counts(16);
    for (int i = 0; i < 10000; ++i) {
        ++counts[s.sample(rng)];
    }
    // Binomial(10000, 1/16): mean 625, sigma sqrt(10000 * 1/16 * 15/16).
    const double sigma = std::sqrt(10000.0 / 16.0 * 15.0 / 16.0);
    for (int c : counts) {
        EXPECT_LT(std::abs(c - 625.0), 5 * sigma);
    }
}

TEST(measure, reproducible_and_storage_independent) {
    std::mt19937_64 gen(5);
    const GateSequence seq = random_sequence(gen, 6, 60);
    StateVector a(6), b(6, 26, StateVector::Storage::Dense);
    a.apply(seq);
    b.apply(seq);
    RandomStream ra(9, StreamId::Measurement), rb(9, StreamId::Measurement);
    for (int i = 0; i < 200; ++i) {
        EXPECT_EQ(a.sample(ra), b.sample(rb));
    }
}

TEST(rng, streams_are_independent_and_seeded) {
    RandomStream a(1, StreamId::Measurement), b(1, StreamId::Schedule), c(1, StreamId::Measurement);
    int same = 0;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.uniform_index(1000);
        same += x == b.uniform_index(1000);
        EXPECT_EQ(x, c.uniform_index(1000));
    }
    EXPECT_LT(same, 10);
    RandomStream d(3, StreamId::Schedule);
    for (int i = 0; i < 1000; ++i) {
        const double u = d.uniform_real();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(d.uniform_index(3), 3u);
    }
}
