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

#include "states.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace couponlab {

namespace {

constexpr double kDegenerateNorm = 1e-14;
constexpr double kIntegerRoundTol = 1e-9;

}  // namespace

PureState::PureState(int dim, std::vector<double> amplitudes)
    : dim_(dim), amps_(std::move(amplitudes)) {
    if (dim_ < 1 || amps_.size() != static_cast<std::size_t>(dim_)) {
        throw InvalidArgumentError("PureState: amplitude vector must have length dim");
    }
}

PureState PureState::uniform(std::span<const int> members, int dim) {
    if (members.empty()) {
        throw EmptySetError("uniform state over an empty set");
    }
    std::vector<double> amps(static_cast<std::size_t>(dim), 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (int e : members) {
        if (e < 1 || e > dim) {
            throw InvalidArgumentError("uniform state: member outside [1..n]");
        }
        amps[static_cast<std::size_t>(e) - 1] = a;
    }
    return PureState(dim, std::move(amps));
}

double PureState::overlap(const PureState& other) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += amps_[i] * other.amps_[i];
    }
    return acc;
}

double PureState::norm() const {
    return std::sqrt(overlap(*this));
}

void PureState::reflect_through(const PureState& axis) {
    const double c = 2.0 * overlap(axis);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] = c * axis.amps_[i] - amps_[i];
    }
}

void PureState::flip_elements(std::span<const int> members) {
    for (int e : members) {
        amps_[static_cast<std::size_t>(e) - 1] = -amps_[static_cast<std::size_t>(e) - 1];
    }
}

std::vector<double> PureState::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        probs[i] = amps_[i] * amps_[i];
    }
    return probs;
}

int measure_computational(const PureState& state, Rng& rng) {
    const double u = rng.next_unit();
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += amps[i] * amps[i];
        if (u < acc) {
            return static_cast<int>(i) + 1;
        }
    }
    return state.dim();
}

ProjectResult project_uniform_all(const PureState& state, Rng& rng) {
    const int n = state.dim();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        all[static_cast<std::size_t>(i)] = i + 1;
    }
    const PureState uniform_all = PureState::uniform(all, n);
    const double overlap = state.overlap(uniform_all);
    const double p_in = overlap * overlap;

    if (rng.next_unit() < p_in) {
        if (std::abs(overlap) < kDegenerateNorm) {
            throw DegenerateProjectionError("projection onto |[n]> has vanishing norm");
        }
        std::vector<double> amps(uniform_all.amplitudes().begin(), uniform_all.amplitudes().end());
        if (overlap < 0.0) {
            for (double& a : amps) {
                a = -a;
            }
        }
        return {ProjectOutcome::in, PureState(n, std::move(amps))};
    }

    std::vector<double> amps(state.amplitudes().begin(), state.amplitudes().end());
    const auto uni = uniform_all.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] -= overlap * uni[i];
    }
    PureState post(n, std::move(amps));
    const double norm = post.norm();
    if (norm < kDegenerateNorm) {
        throw DegenerateProjectionError("projection away from |[n]> has vanishing norm");
    }
    std::vector<double> scaled(post.amplitudes().begin(), post.amplitudes().end());
    for (double& a : scaled) {
        a /= norm;
    }
    return {ProjectOutcome::out, PureState(n, std::move(scaled))};
}

AmplifySchedule amplification_schedule(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0 + 1e-12) {
        throw InvalidArgumentError("amplification_schedule: overlap must be in (0, 1]");
    }
    const double theta = std::asin(std::min(alpha, 1.0));
    // Plain rounds rotate by 2*theta; t rounds land exactly when
    // (2t + 1) * theta = pi/2.
    const double t_exact = std::max(std::numbers::pi / (4.0 * theta) - 0.5, 0.0);
    const double t_nearest = std::round(t_exact);
    AmplifySchedule schedule;
    if (std::abs(t_exact - t_nearest) <= kIntegerRoundTol) {
        schedule.plain_rounds = static_cast<std::uint64_t>(t_nearest);
        schedule.residual_round = false;
    } else {
        schedule.plain_rounds = static_cast<std::uint64_t>(std::floor(t_exact));
        schedule.residual_round = true;
    }
    return schedule;
}

TwoDimState exact_amplitude_amplify(const TwoDimState& start, double alpha,
                                    ResourceMeter& meter) {
    const AmplifySchedule schedule = amplification_schedule(alpha);
    const double theta = std::asin(std::min(alpha, 1.0));

    TwoDimState state = start;
    double phi = std::atan2(state.on_target, state.on_ortho);
    for (std::uint64_t r = 0; r < schedule.plain_rounds; ++r) {
        phi += 2.0 * theta;
        ++meter.reflections_used;
    }
    if (schedule.residual_round) {
        phi = std::numbers::pi / 2.0;
        ++meter.reflections_used;
    }
    state.on_target = std::sin(phi);
    state.on_ortho = std::cos(phi);
    return state;
}

}  // namespace couponlab
