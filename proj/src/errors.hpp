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

#ifndef COUPONLAB_ERRORS_HPP
#define COUPONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace couponlab {

enum class ErrorKind {
    invalid_argument,
    overflow,
    dimension_too_large,
    rank_mismatch,
    regime_unsupported,
    witness_infeasible,
    not_psd,
    empty_set,
    degenerate_projection,
    budget_exhausted,
    iteration_cap,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

#define COUPONLAB_DEFINE_ERROR(Name, Kind)                                        \
    class Name : public Error {                                                   \
      public:                                                                     \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}  \
    }

COUPONLAB_DEFINE_ERROR(InvalidArgumentError, invalid_argument);
COUPONLAB_DEFINE_ERROR(OverflowError, overflow);
COUPONLAB_DEFINE_ERROR(DimensionTooLargeError, dimension_too_large);
COUPONLAB_DEFINE_ERROR(RankMismatchError, rank_mismatch);
COUPONLAB_DEFINE_ERROR(RegimeUnsupportedError, regime_unsupported);
COUPONLAB_DEFINE_ERROR(WitnessInfeasibleError, witness_infeasible);
COUPONLAB_DEFINE_ERROR(NotPsdError, not_psd);
COUPONLAB_DEFINE_ERROR(EmptySetError, empty_set);
COUPONLAB_DEFINE_ERROR(DegenerateProjectionError, degenerate_projection);
COUPONLAB_DEFINE_ERROR(BudgetExhaustedError, budget_exhausted);
COUPONLAB_DEFINE_ERROR(IterationCapError, iteration_cap);

#undef COUPONLAB_DEFINE_ERROR

}  // namespace couponlab

#endif
