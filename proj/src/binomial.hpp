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

#ifndef COUPONLAB_BINOMIAL_HPP
#define COUPONLAB_BINOMIAL_HPP

#include <cstdint>
#include <string>

namespace couponlab {

// Exact 128-bit combinatorics. Results never wrap: any intermediate that
// would exceed 128 bits raises OverflowError.
using uint128 = unsigned __int128;

// C(a, b) with the usual conventions: 0 when b < 0 or b > a, C(a, 0) = 1.
uint128 binom(std::int64_t a, std::int64_t b);

// C(a, b) narrowed to 64 bits; OverflowError if it does not fit.
std::uint64_t binom_u64(std::int64_t a, std::int64_t b);

// Eigenspace dimension of the Johnson scheme: C(n, j) - C(n, j-1).
uint128 eigenspace_dim(std::int64_t n, std::int64_t j);

double to_double(uint128 v);
std::string to_string(uint128 v);

}  // namespace couponlab

#endif
