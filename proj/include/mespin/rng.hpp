/* Copyright 2026 The mespin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <random>

namespace mespin {

// Derives a well-mixed 64-bit stream seed from (seed, stream_index) so that
// Monte Carlo trials own independent generators regardless of how trials are
// scheduled across threads.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_stream_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(derive_stream_seed(seed, stream));
}

// Standard-normal sampler with its own engine state.
class NormalSampler {
  public:
    explicit NormalSampler(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(make_stream_engine(seed, stream)) {}

    double operator()() { return normal_(engine_); }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace mespin
