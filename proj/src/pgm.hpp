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

#ifndef COUPONLAB_PGM_HPP
#define COUPONLAB_PGM_HPP

#include <cstdint>
#include <vector>

#include "scheme.hpp"
#include "witness.hpp"

namespace couponlab {

// Dense PGM validation path is limited to this many states.
inline constexpr std::uint64_t kPgmDenseGuard = 200;

// Idempotent-basis coefficients of the Hadamard power Psi^{o ell} (the Gram
// matrix of ell-copy sample states), evolved from Psi^{o 0} = J = N E_0.
struct GramPower {
    SchemeParams params;
    std::uint64_t ell = 0;
    std::vector<double> coeffs;
};

GramPower gram_power_coeffs(const SchemeParams& p, std::uint64_t ell);

// Success probability of the square-root measurement on ell copies:
// (sum_j sqrt(c_j) d_j)^2 / N^2. Lives in [1/N, 1].
double pgm_success(const SchemeParams& p, std::uint64_t ell);

// pgm_success for every ell in [0, ell_max]; one recurrence sweep.
std::vector<double> pgm_curve(const SchemeParams& p, std::uint64_t ell_max);

// Dense validation path: entrywise power of Psi, PSD square root,
// (1/N) sum_x (sqrt(G)_{xx})^2.
double pgm_success_dense(const SchemeParams& p, std::uint64_t ell);

}  // namespace couponlab

#endif
