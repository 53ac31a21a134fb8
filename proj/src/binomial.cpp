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

#include "binomial.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace couponlab {

namespace {

uint128 checked_mul(uint128 a, uint128 b, std::int64_t n, std::int64_t r) {
    uint128 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("binom(" + std::to_string(n) + ", " + std::to_string(r) +
                            ") exceeds 128-bit exact integer range");
    }
    return out;
}

}  // namespace

uint128 binom(std::int64_t a, std::int64_t b) {
    if (a < 0) {
        throw InvalidArgumentError("binom: a must be non-negative");
    }
    if (b < 0 || b > a) {
        return 0;
    }
    std::int64_t r = std::min<std::int64_t>(b, a - b);
    // Multiplicative formula; after step i the accumulator equals
    // C(a - r + i, i), so every division is exact.
    uint128 acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        acc = checked_mul(acc, static_cast<uint128>(a - r + i), a, b);
        acc /= static_cast<uint128>(i);
    }
    return acc;
}

std::uint64_t binom_u64(std::int64_t a, std::int64_t b) {
    uint128 v = binom(a, b);
    if (v > static_cast<uint128>(std::numeric_limits<std::uint64_t>::max())) {
        throw OverflowError("binom(" + std::to_string(a) + ", " + std::to_string(b) +
                            ") exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(v);
}

uint128 eigenspace_dim(std::int64_t n, std::int64_t j) {
    return binom(n, j) - binom(n, j - 1);
}

double to_double(uint128 v) {
    return static_cast<double>(v);
}

std::string to_string(uint128 v) {
    if (v == 0) {
        return "0";
    }
    std::string digits;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace couponlab
