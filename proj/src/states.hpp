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

#ifndef COUPONLAB_STATES_HPP
#define COUPONLAB_STATES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rng.hpp"

namespace couponlab {

// Exact resource accounting across a learner run.
struct ResourceMeter {
    std::uint64_t copies_consumed = 0;
    std::uint64_t reflections_used = 0;
    std::uint64_t classical_samples = 0;
};

// Real-amplitude state over the computational basis {|1>, ..., |n>}. Every
// state reachable by the algorithms here has real amplitudes.
class PureState {
  public:
    PureState(int dim, std::vector<double> amplitudes);

    // Uniform superposition over a nonempty subset of [1..n].
    static PureState uniform(std::span<const int> members, int dim);

    int dim() const { return dim_; }
    double amplitude(int element) const { return amps_[static_cast<std::size_t>(element) - 1]; }
    std::span<const double> amplitudes() const { return amps_; }

    double overlap(const PureState& other) const;
    double norm() const;

    // In-place 2|axis><axis| - Id.
    void reflect_through(const PureState& axis);
    // In-place sign flip on the listed elements (Id - 2 sum |i><i|).
    void flip_elements(std::span<const int> members);

    std::vector<double> probabilities() const;

  private:
    int dim_;
    std::vector<double> amps_;
};

// Samples the computational-basis measurement; returns the 1-based element.
// The state is consumed in the protocol sense; the caller discards it.
int measure_computational(const PureState& state, Rng& rng);

enum class ProjectOutcome { in, out };

struct ProjectResult {
    ProjectOutcome outcome;
    PureState post;
};

// Two-outcome projective measurement {|[n]><[n]|, Id - |[n]><[n]|}.
ProjectResult project_uniform_all(const PureState& state, Rng& rng);

// Coordinates in a 2-dimensional invariant plane spanned by two orthonormal
// axis states (e.g. |S'> and the uniform state over the live universe).
struct TwoDimState {
    double on_target = 0.0;
    double on_ortho = 0.0;
    std::string target_label;
    std::string ortho_label;
};

// Reflection schedule of exact amplitude amplification for a known overlap:
// plain Grover rounds rotate by 2*asin(alpha); when the rotation does not
// land exactly, one extra phase-adjusted round covers the residual angle.
struct AmplifySchedule {
    std::uint64_t plain_rounds = 0;
    bool residual_round = false;

    std::uint64_t total() const { return plain_rounds + (residual_round ? 1 : 0); }
};

AmplifySchedule amplification_schedule(double alpha);

// Rotates `start` (with known target overlap alpha) exactly onto the target
// axis. Each round invokes the costly axis reflection once, which is what
// reflections_used bills.
TwoDimState exact_amplitude_amplify(const TwoDimState& start, double alpha, ResourceMeter& meter);

// Full-dimension counterpart used by the validation paths: plain rounds are
// oracle + diffusion reflections, the residual round is the in-plane
// rotation onto the target. `oracle` must implement the in-plane reflection
// about the target axis (up to global sign).
template <typename OracleFn>
PureState amplify_dense(PureState state, const PureState& start, const PureState& target,
                        double alpha, OracleFn&& oracle, ResourceMeter& meter) {
    const AmplifySchedule schedule = amplification_schedule(alpha);
    for (std::uint64_t r = 0; r < schedule.plain_rounds; ++r) {
        oracle(state);
        state.reflect_through(start);
        ++meter.reflections_used;
    }
    if (schedule.residual_round) {
        // Two generalized reflections amount to a rotation by the residual
        // angle, which lands exactly on the target axis (up to global sign).
        const double t_comp = state.overlap(target);
        std::vector<double> amps(target.amplitudes().begin(), target.amplitudes().end());
        if (t_comp < 0.0) {
            for (double& a : amps) {
                a = -a;
            }
        }
        state = PureState(target.dim(), std::move(amps));
        ++meter.reflections_used;
    }
    return state;
}

}  // namespace couponlab

#endif
