// Copyright 2026 The couponlab authors
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

#ifndef COUPONLAB_RNG_HPP
#define COUPONLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace couponlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based seed derivation so trials can be distributed over threads
// while keeping results independent of the schedule.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ (0xd1b54a32d192ed03ULL * (stream + 1))) + index);
}

// mt19937_64 has a standardized output sequence; the sampling helpers below
// avoid std::*_distribution so the draw sequence is identical on every
// standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform in [0, n), rejection sampled so every value is equally likely.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = (UINT64_MAX / n) * n;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x < limit) {
                return x % n;
            }
        }
    }

    // Index into a small unnormalized weight vector.
    std::size_t categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) {
            total += w;
        }
        double u = next_unit() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) {
                return i;
            }
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace couponlab

#endif
