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

#include "scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace couponlab {

namespace {

constexpr double kRankTol = 1e-9;

std::uint64_t dense_dim(const SchemeParams& p) {
    uint128 n_subsets = p.subsets();
    if (n_subsets > kDenseGuard) {
        throw DimensionTooLargeError("dense path limited to C(n,k) <= " +
                                     std::to_string(kDenseGuard) + ", got " +
                                     to_string(n_subsets));
    }
    return static_cast<std::uint64_t>(n_subsets);
}

}  // namespace

SchemeParams SchemeParams::create(std::int64_t n, std::int64_t k) {
    if (n < 2 || k < 1 || k >= n) {
        throw InvalidArgumentError("SchemeParams: need 1 <= k < n with n >= 2");
    }
    SchemeParams p;
    p.n_ = n;
    p.k_ = k;
    p.missing_ = n - k;
    p.classes_ = std::min(k, n - k);
    try {
        p.subsets_ = binom(n, k);
    } catch (const OverflowError&) {
        // Kept lazy: only paths that actually need |U| report the overflow.
        p.subsets_ = std::nullopt;
    }
    return p;
}

uint128 SchemeParams::subsets() const {
    if (!subsets_) {
        throw OverflowError("C(" + std::to_string(n_) + ", " + std::to_string(k_) +
                            ") exceeds 128-bit exact integer range");
    }
    return *subsets_;
}

std::uint64_t SchemeParams::subsets_u64() const {
    uint128 v = subsets();
    if (v > static_cast<uint128>(UINT64_MAX)) {
        throw OverflowError("C(n, k) exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(v);
}

DenseSym adjacency_matrix(const SchemeParams& p, std::int64_t cls) {
    if (cls < 0 || cls > p.classes()) {
        throw InvalidArgumentError("adjacency_matrix: class index out of range");
    }
    const std::uint64_t dim = dense_dim(p);
    const auto subsets = enumerate_subsets(static_cast<int>(p.n()), static_cast<int>(p.k()));
    const int want = static_cast<int>(p.k() - cls);
    DenseSym a = DenseSym::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t y = x; y < dim; ++y) {
            if (intersection_size(subsets[x], subsets[y]) == want) {
                a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1.0;
                a(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
            }
        }
    }
    return a;
}

IdempotentBasis idempotents_bruteforce(const SchemeParams& p) {
    const std::uint64_t dim = dense_dim(p);
    const int n = static_cast<int>(p.n());
    const int k = static_cast<int>(p.k());
    const auto subsets = enumerate_subsets(n, k);
    const Eigen::Index idim = static_cast<Eigen::Index>(dim);

    IdempotentBasis basis;
    basis.params = p;

    // Orthonormal vectors accumulated over all eigenspaces so far; V_j is
    // spanned by `accumulated` once level j has been absorbed.
    std::vector<Eigen::VectorXd> accumulated;
    accumulated.reserve(dim);

    for (std::int64_t j = 0; j <= p.classes(); ++j) {
        // Indicator-sum span vectors for level j. For k <= n/2 these are
        // sums over supersets of each j-set z; otherwise sums over subsets
        // of each (n-j)-set z.
        const int zsize = (2 * k <= n) ? static_cast<int>(j) : static_cast<int>(n - j);
        const auto zs = enumerate_subsets(n, zsize);

        std::vector<Eigen::VectorXd> fresh;
        for (const auto& z : zs) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(idim);
            for (std::uint64_t x = 0; x < dim; ++x) {
                const bool hit = (2 * k <= n)
                                     ? intersection_size(subsets[x], z) == static_cast<int>(z.size())
                                     : intersection_size(subsets[x], z) == k;
                if (hit) {
                    v(static_cast<Eigen::Index>(x)) = 1.0;
                }
            }
            // Modified Gram-Schmidt with one re-orthogonalization pass.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& u : accumulated) {
                    v -= u.dot(v) * u;
                }
                for (const auto& u : fresh) {
                    v -= u.dot(v) * u;
                }
            }
            const double norm = v.norm();
            if (norm > kRankTol) {
                fresh.push_back(v / norm);
            }
        }

        const std::uint64_t expected =
            static_cast<std::uint64_t>(eigenspace_dim(p.n(), j));
        if (fresh.size() != expected) {
            throw RankMismatchError("idempotents: eigenspace " + std::to_string(j) + " of J(" +
                                    std::to_string(p.n()) + "," + std::to_string(p.k()) +
                                    ") has rank " + std::to_string(fresh.size()) + ", expected " +
                                    std::to_string(expected));
        }

        DenseSym e = DenseSym::Zero(idim, idim);
        for (const auto& u : fresh) {
            e += u * u.transpose();
        }
        basis.projectors.push_back(std::move(e));
        basis.dims.push_back(expected);
        for (auto& u : fresh) {
            accumulated.push_back(std::move(u));
        }
    }
    return basis;
}

double dual_eigenvalue_q1(const SchemeParams& p, std::int64_t i) {
    if (i < 0 || i > p.classes()) {
        throw InvalidArgumentError("dual_eigenvalue_q1: class index out of range");
    }
    const double n = static_cast<double>(p.n());
    const double k = static_cast<double>(p.k());
    return n * (n - 1.0) / (n - k) * ((k - static_cast<double>(i)) / k - k / n);
}

std::array<double, 3> krein_q1(const SchemeParams& p, std::int64_t j) {
    if (j < 0 || j > p.classes()) {
        throw InvalidArgumentError("krein_q1: class index out of range");
    }
    const std::int64_t n = p.n();
    const std::int64_t k = p.k();
    const std::int64_t m = p.classes();
    const std::int64_t d = p.classes();

    // Each parameter is an exact integer ratio; a vanishing numerator wins
    // over a vanishing denominator (the 0/0 cases sit on the boundary where
    // the coefficient is genuinely zero).
    auto ratio = [](std::int64_t num_a, std::int64_t num_b, std::int64_t num_c, std::int64_t num_d,
                    std::int64_t num_e, std::int64_t den_a, std::int64_t den_b, std::int64_t den_c,
                    std::int64_t den_d) -> double {
        const __int128 num = static_cast<__int128>(num_a) * num_b * num_c * num_d * num_e;
        if (num == 0) {
            return 0.0;
        }
        const __int128 den = static_cast<__int128>(den_a) * den_b * den_c * den_d;
        return static_cast<double>(num) / static_cast<double>(den);
    };

    std::array<double, 3> q{0.0, 0.0, 0.0};
    if (j - 1 >= 0) {
        q[0] = ratio(j, n - 1, n, k - j + 1, m - j + 1, m * k, n - 2 * j + 1, n - 2 * j + 2, 1);
    }
    q[1] = ratio(j, n - 1, n - j + 1, (m - k) * (m - k), 1, m * k, n - 2 * j, n - 2 * j + 2, 1);
    if (j + 1 <= d) {
        q[2] = ratio(n, n - 1, n - j + 1, k - j, m - j, m * k, n - 2 * j, n - 2 * j + 1, 1);
    }
    return q;
}

DenseSym gram_matrix(const SchemeParams& p) {
    const std::uint64_t dim = dense_dim(p);
    const auto subsets = enumerate_subsets(static_cast<int>(p.n()), static_cast<int>(p.k()));
    const double k = static_cast<double>(p.k());
    DenseSym g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t y = x; y < dim; ++y) {
            const double v = static_cast<double>(intersection_size(subsets[x], subsets[y])) / k;
            g(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = v;
            g(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = v;
        }
    }
    return g;
}

IdempotentDecomposition decompose_in_idempotents(const DenseSym& m, const IdempotentBasis& basis) {
    if (basis.projectors.empty() || m.rows() != basis.projectors.front().rows() ||
        m.rows() != m.cols()) {
        throw InvalidArgumentError("decompose_in_idempotents: dimension mismatch");
    }
    IdempotentDecomposition out;
    out.coeffs.resize(basis.projectors.size());
    DenseSym residual = m;
    for (std::size_t j = 0; j < basis.projectors.size(); ++j) {
        const double c = basis.projectors[j].cwiseProduct(m).sum() /
                         static_cast<double>(basis.dims[j]);
        out.coeffs[j] = c;
        residual -= c * basis.projectors[j];
    }
    out.residual = residual.norm();
    return out;
}

}  // namespace couponlab
