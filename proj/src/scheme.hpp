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

#ifndef COUPONLAB_SCHEME_HPP
#define COUPONLAB_SCHEME_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "binomial.hpp"
#include "subset_rank.hpp"

namespace couponlab {

using DenseSym = Eigen::MatrixXd;

// Dense brute-force paths exist for validation only; the recurrence engine
// covers large instances.
inline constexpr std::uint64_t kDenseGuard = 10000;

// Problem dimensions of the Johnson scheme J(n, k): k-subsets of [1..n],
// m = n - k missing elements, min(k, n-k) + 1 eigenspaces.
class SchemeParams {
  public:
    static SchemeParams create(std::int64_t n, std::int64_t k);

    std::int64_t n() const { return n_; }
    std::int64_t k() const { return k_; }
    std::int64_t missing() const { return missing_; }
    std::int64_t classes() const { return classes_; }

    // |U| = C(n, k), exact; OverflowError when it does not fit in 128 bits.
    uint128 subsets() const;
    double subsets_as_double() const { return to_double(subsets()); }
    std::uint64_t subsets_u64() const;

    bool in_reflection_regime() const { return 2 * k_ >= n_; }

  private:
    SchemeParams() = default;

    std::int64_t n_ = 0;
    std::int64_t k_ = 0;
    std::int64_t missing_ = 0;
    std::int64_t classes_ = 0;
    std::optional<uint128> subsets_;
};

// A_i[x, y] = 1 iff |x intersect y| = k - i; A_0 is the identity.
DenseSym adjacency_matrix(const SchemeParams& p, std::int64_t cls);

// Primitive idempotents E_0..E_d with their eigenspace dimensions d_j.
struct IdempotentBasis {
    SchemeParams params;
    std::vector<DenseSym> projectors;
    std::vector<std::uint64_t> dims;
};

// Builds the E_j as orthogonal projectors onto V_j intersect V_{j-1}^perp,
// where the V_j are spanned by indicator-sum vectors (the construction
// branches on k <= n/2). RankMismatchError if dim V_j misses C(n, j).
IdempotentBasis idempotents_bruteforce(const SchemeParams& p);

// Dual eigenvalue q_1(i) = n(n-1)/(n-k) * ((k-i)/k - k/n); q_0(i) = 1.
double dual_eigenvalue_q1(const SchemeParams& p, std::int64_t i);

// Closed-form Krein parameters involving E_1, evaluated with
// m = min(k, n-k): the triple (q_{j-1,1}(j), q_{j,1}(j), q_{j+1,1}(j)).
// Out-of-range indices contribute 0.
std::array<double, 3> krein_q1(const SchemeParams& p, std::int64_t j);

// Gram matrix of the sample states: Psi[x, y] = |x intersect y| / k.
DenseSym gram_matrix(const SchemeParams& p);

// Projection of a commutant matrix onto the idempotent basis:
// coeff[j] = Tr[E_j M] / d_j, plus the Frobenius residual.
struct IdempotentDecomposition {
    std::vector<double> coeffs;
    double residual = 0.0;
};

IdempotentDecomposition decompose_in_idempotents(const DenseSym& m, const IdempotentBasis& basis);

}  // namespace couponlab

#endif
