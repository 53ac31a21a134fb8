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

#ifndef COUPONLAB_WITNESS_HPP
#define COUPONLAB_WITNESS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scheme.hpp"

namespace couponlab {

// Hard cap on recurrence iterations in sample_lower_bound.
inline constexpr std::uint64_t kRecurrenceStepCap = 1000000000;

// Tridiagonal stochastic coefficients of the Hadamard-product recurrence:
// row j holds (p_{j,-1}, p_{j,0}, p_{j,+1}) for j = 0..m with m = n - k.
// Only defined for k >= n/2; RegimeUnsupportedError otherwise.
struct TransitionCoeffs {
    SchemeParams params;
    std::vector<std::array<double, 3>> rows;
};

TransitionCoeffs transition_coeffs(const SchemeParams& p);

// The dual adversary witness: gamma_0 = .. = gamma_{m-1} = 1 and
// gamma_m = -C(n, m-1) / d_m, which must land in [-1, 0] for the witness to
// have unit spectral norm. Infeasibility is an error, never a clamp.
struct WitnessGamma {
    std::vector<double> gammas;
    double gamma_m = 0.0;
    bool feasible = false;
};

WitnessGamma build_witness(const SchemeParams& p);

// gamma_m as a value (reduced form -m / (n - 2m + 1)), without feasibility
// enforcement; used for reporting infeasible instances.
double witness_gamma_m(const SchemeParams& p);

// Coefficients of a commutant matrix in the idempotent basis, evolved by
// Hadamard products with the Gram matrix.
struct CoeffVector {
    std::vector<double> c;
    std::uint64_t steps_applied = 0;
};

CoeffVector recurrence_step(const CoeffVector& c, const TransitionCoeffs& t);
void recurrence_step_inplace(CoeffVector& c, const TransitionCoeffs& t);

// max_j |gamma_j^{(s)}|, the spectral norm of Gamma o Psi^{o s}.
double witness_value(const SchemeParams& p, std::uint64_t s);

// witness_value for every s in [0, s_max]; one recurrence sweep.
std::vector<double> witness_curve(const SchemeParams& p, std::uint64_t s_max);

// Any s-copy identification procedure errs with probability at least
// (witness_value(s) / 4)^2.
double error_lower_bound(const SchemeParams& p, std::uint64_t s);

// Largest s with witness_value(s) >= threshold.
std::uint64_t sample_lower_bound(const SchemeParams& p, double threshold = 0.5);

struct HittingStats {
    double expectation = 0.0;
    double variance = 0.0;
};

// Absorption statistics of the upward chain: E[T_0] = sum 1/p_{j,+1},
// Var[T_0] = sum (1 - p_{j,+1}) / p_{j,+1}^2.
HittingStats hitting_stats(const SchemeParams& p);

struct ChainStats {
    double mean_b = 0.0;
    double mean_c = 0.0;
    HittingStats t0_empirical;
    std::uint64_t trials = 0;
};

// Monte Carlo over the B- and C-chains started from the witness values,
// plus the empirical hitting time of the C-chain from position 0.
// Deterministic given (seed); trial-parallel with order-independent
// aggregation.
ChainStats chain_monte_carlo(const SchemeParams& p, std::uint64_t s, std::int64_t j,
                             std::uint64_t trials, std::uint64_t seed, int threads = 0);

}  // namespace couponlab

#endif
