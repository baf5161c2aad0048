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

#ifndef QMAX_RNG_HPP
#define QMAX_RNG_HPP

#include <cstdint>
#include <random>

namespace qmax {

/// Identifies an independent substream derived from one user seed.
enum class StreamId : std::uint32_t {
    Measurement = 1,
    Schedule = 2,
    Threshold = 3,
};

/// Seeded pseudorandom source. The draws below avoid the standard distribution
/// classes so that sequences are identical across standard library vendors.
class RandomStream {
   public:
    RandomStream(std::uint64_t seed, StreamId stream)
        : engine_(make_engine(seed, static_cast<std::uint32_t>(stream))) {
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound) {
        // Rejection sampling removes modulo bias.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

   private:
    static std::mt19937_64 make_engine(std::uint64_t seed, std::uint32_t stream) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed & 0xFFFFFFFFu), static_cast<std::uint32_t>(seed >> 32), stream};
        return std::mt19937_64(seq);
    }

    std::mt19937_64 engine_;
};

}  // namespace qmax

#endif
