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

#include "pgm.hpp"

#include <cmath>
#include <string>

#include "dense.hpp"
#include "errors.hpp"

namespace couponlab {

namespace {

constexpr double kNegClamp = -1e-12;

void clamp_coeffs(std::vector<double>& c) {
    for (double& v : c) {
        if (v < 0.0) {
            if (v < kNegClamp) {
                throw NotPsdError("gram power coefficient " + std::to_string(v) +
                                  " below clamp tolerance");
            }
            v = 0.0;
        }
    }
}

double success_from_coeffs(const SchemeParams& p, const std::vector<double>& coeffs) {
    const double n_subsets = p.subsets_as_double();
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        acc += std::sqrt(coeffs[j]) *
               to_double(eigenspace_dim(p.n(), static_cast<std::int64_t>(j)));
    }
    const double amp = acc / n_subsets;
    return amp * amp;
}

}  // namespace

GramPower gram_power_coeffs(const SchemeParams& p, std::uint64_t ell) {
    const TransitionCoeffs t = transition_coeffs(p);
    GramPower g;
    g.params = p;
    g.ell = ell;
    CoeffVector c;
    c.c.assign(static_cast<std::size_t>(p.missing()) + 1, 0.0);
    c.c[0] = p.subsets_as_double();
    for (std::uint64_t i = 0; i < ell; ++i) {
        recurrence_step_inplace(c, t);
    }
    g.coeffs = std::move(c.c);
    clamp_coeffs(g.coeffs);
    return g;
}

double pgm_success(const SchemeParams& p, std::uint64_t ell) {
    return success_from_coeffs(p, gram_power_coeffs(p, ell).coeffs);
}

std::vector<double> pgm_curve(const SchemeParams& p, std::uint64_t ell_max) {
    const TransitionCoeffs t = transition_coeffs(p);
    CoeffVector c;
    c.c.assign(static_cast<std::size_t>(p.missing()) + 1, 0.0);
    c.c[0] = p.subsets_as_double();

    std::vector<double> curve;
    curve.reserve(ell_max + 1);
    for (std::uint64_t ell = 0; ell <= ell_max; ++ell) {
        if (ell > 0) {
            recurrence_step_inplace(c, t);
        }
        std::vector<double> clamped = c.c;
        clamp_coeffs(clamped);
        curve.push_back(success_from_coeffs(p, clamped));
    }
    return curve;
}

double pgm_success_dense(const SchemeParams& p, std::uint64_t ell) {
    const std::uint64_t dim = p.subsets_u64();
    if (dim > kPgmDenseGuard) {
        throw DimensionTooLargeError("pgm_success_dense limited to C(n,k) <= " +
                                     std::to_string(kPgmDenseGuard));
    }
    const DenseSym psi = gram_matrix(p);
    DenseSym g = DenseSym::Ones(psi.rows(), psi.cols());
    for (std::uint64_t i = 0; i < ell; ++i) {
        g = g.cwiseProduct(psi);
    }
    const DenseSym root = psd_sqrt(g);
    double acc = 0.0;
    for (Eigen::Index x = 0; x < root.rows(); ++x) {
        acc += root(x, x) * root(x, x);
    }
    return acc / static_cast<double>(dim);
}

}  // namespace couponlab
