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

#ifndef COUPONLAB_DENSE_HPP
#define COUPONLAB_DENSE_HPP

#include <Eigen/Dense>

namespace couponlab {

// Spectral norm of a real symmetric matrix.
double spectral_norm_sym(const Eigen::MatrixXd& m);

// PSD square root via symmetric eigendecomposition. Eigenvalues in
// [fail_floor, 0) are treated as roundoff and clamped to 0; anything below
// fail_floor raises NotPsdError.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, double fail_floor = -1e-8);

}  // namespace couponlab

#endif
