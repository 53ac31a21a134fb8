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

#include "dense.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace couponlab {

double spectral_norm_sym(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, double fail_floor) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    Eigen::VectorXd vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < fail_floor) {
            throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(vals(i)) +
                              " below PSD tolerance");
        }
        vals(i) = vals(i) > 0.0 ? std::sqrt(vals(i)) : 0.0;
    }
    return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().transpose();
}

}  // namespace couponlab
