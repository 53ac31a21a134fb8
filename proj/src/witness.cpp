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

#include "witness.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace couponlab {

namespace {

void require_reflection_regime(const SchemeParams& p, const char* who) {
    if (!p.in_reflection_regime()) {
        throw RegimeUnsupportedError(std::string(who) + ": requires k >= n/2 (got n=" +
                                     std::to_string(p.n()) + ", k=" + std::to_string(p.k()) +
                                     "); the transition closed forms are only derived there");
    }
}

// Exact integer numerator/denominator, one final division. A vanishing
// numerator takes precedence over a vanishing denominator: the 0/0 cases
// (k = n/2, j = m) sit on the boundary where the coefficient is zero.
double exact_ratio(__int128 num, __int128 den) {
    if (num == 0) {
        return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

TransitionCoeffs transition_coeffs(const SchemeParams& p) {
    require_reflection_regime(p, "transition_coeffs");
    const std::int64_t n = p.n();
    const std::int64_t k = p.k();
    const std::int64_t m = p.missing();

    TransitionCoeffs t;
    t.params = p;
    t.rows.resize(static_cast<std::size_t>(m) + 1);
    for (std::int64_t j = 0; j <= m; ++j) {
        const __int128 down = static_cast<__int128>(j) * (k - j + 1) * (m - j + 1);
        const __int128 down_den = static_cast<__int128>(n - 2 * j + 1) * (n - 2 * j + 2) * k;

        const __int128 flat = static_cast<__int128>(j) * (n - j + 1) * (m - k) * (m - k);
        const __int128 flat_den = static_cast<__int128>(n) * k * (n - 2 * j) * (n - 2 * j + 2);

        const __int128 up = static_cast<__int128>(n - j + 1) * (k - j) * (m - j);
        const __int128 up_den = static_cast<__int128>(n - 2 * j) * (n - 2 * j + 1) * k;

        auto& row = t.rows[static_cast<std::size_t>(j)];
        row[0] = exact_ratio(down, down_den);
        row[1] = static_cast<double>(k) / static_cast<double>(n) + exact_ratio(flat, flat_den);
        row[2] = exact_ratio(up, up_den);
    }
    return t;
}

double witness_gamma_m(const SchemeParams& p) {
    // -C(n, m-1) / (C(n, m) - C(n, m-1)) reduced via C(n,m)/C(n,m-1) =
    // (n-m+1)/m, so the value exists even when the binomials overflow.
    const double m = static_cast<double>(p.missing());
    const double n = static_cast<double>(p.n());
    return -m / (n - 2.0 * m + 1.0);
}

WitnessGamma build_witness(const SchemeParams& p) {
    const std::int64_t m = p.missing();
    if (m < 1) {
        throw InvalidArgumentError("build_witness: need at least one missing element");
    }
    const double gamma_m = witness_gamma_m(p);
    if (gamma_m < -1.0 || gamma_m > 0.0) {
        throw WitnessInfeasibleError(
            "witness infeasible for n=" + std::to_string(p.n()) + ", k=" + std::to_string(p.k()) +
            ": gamma_m = " + std::to_string(gamma_m) +
            " outside [-1, 0] (d_m does not dominate the remaining dimensions)");
    }
    WitnessGamma w;
    w.gammas.assign(static_cast<std::size_t>(m) + 1, 1.0);
    w.gammas.back() = gamma_m;
    w.gamma_m = gamma_m;
    w.feasible = true;
    return w;
}

CoeffVector recurrence_step(const CoeffVector& c, const TransitionCoeffs& t) {
    CoeffVector out = c;
    recurrence_step_inplace(out, t);
    return out;
}

void recurrence_step_inplace(CoeffVector& c, const TransitionCoeffs& t) {
    if (c.c.size() != t.rows.size()) {
        throw InvalidArgumentError("recurrence_step: coefficient/row length mismatch");
    }
    const std::size_t len = c.c.size();
    std::vector<double> next(len);
    for (std::size_t j = 0; j < len; ++j) {
        const double below = j > 0 ? c.c[j - 1] : 0.0;
        const double above = j + 1 < len ? c.c[j + 1] : 0.0;
        next[j] = t.rows[j][0] * below + t.rows[j][1] * c.c[j] + t.rows[j][2] * above;
    }
    c.c = std::move(next);
    ++c.steps_applied;
}

namespace {

double max_abs(const std::vector<double>& v) {
    double best = 0.0;
    for (double x : v) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

}  // namespace

double witness_value(const SchemeParams& p, std::uint64_t s) {
    const TransitionCoeffs t = transition_coeffs(p);
    CoeffVector c{build_witness(p).gammas, 0};
    for (std::uint64_t i = 0; i < s; ++i) {
        recurrence_step_inplace(c, t);
    }
    return max_abs(c.c);
}

std::vector<double> witness_curve(const SchemeParams& p, std::uint64_t s_max) {
    const TransitionCoeffs t = transition_coeffs(p);
    CoeffVector c{build_witness(p).gammas, 0};
    std::vector<double> curve;
    curve.reserve(s_max + 1);
    curve.push_back(max_abs(c.c));
    for (std::uint64_t s = 1; s <= s_max; ++s) {
        recurrence_step_inplace(c, t);
        curve.push_back(max_abs(c.c));
    }
    return curve;
}

double error_lower_bound(const SchemeParams& p, std::uint64_t s) {
    const double v = witness_value(p, s) / 4.0;
    return v * v;
}

std::uint64_t sample_lower_bound(const SchemeParams& p, double threshold) {
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw InvalidArgumentError("sample_lower_bound: threshold must be in (0, 1]");
    }
    const TransitionCoeffs t = transition_coeffs(p);
    CoeffVector c{build_witness(p).gammas, 0};
    std::uint64_t s = 0;
    while (max_abs(c.c) >= threshold) {
        if (s >= kRecurrenceStepCap) {
            throw IterationCapError("sample_lower_bound: exceeded " +
                                    std::to_string(kRecurrenceStepCap) + " recurrence steps");
        }
        recurrence_step_inplace(c, t);
        ++s;
    }
    // The value just dropped below the threshold at step s; the witness held
    // at s - 1. s >= 1 always because witness_value(0) = 1 >= threshold.
    return s - 1;
}

HittingStats hitting_stats(const SchemeParams& p) {
    const TransitionCoeffs t = transition_coeffs(p);
    HittingStats stats;
    for (std::int64_t j = 0; j < p.missing(); ++j) {
        const double up = t.rows[static_cast<std::size_t>(j)][2];
        stats.expectation += 1.0 / up;
        stats.variance += (1.0 - up) / (up * up);
    }
    return stats;
}

ChainStats chain_monte_carlo(const SchemeParams& p, std::uint64_t s, std::int64_t j,
                             std::uint64_t trials, std::uint64_t seed, int threads) {
    if (trials < 1) {
        throw InvalidArgumentError("chain_monte_carlo: trials must be >= 1");
    }
    if (j < 0 || j > p.missing()) {
        throw InvalidArgumentError("chain_monte_carlo: start index out of range");
    }
    const TransitionCoeffs t = transition_coeffs(p);
    const WitnessGamma w = build_witness(p);
    const std::int64_t m = p.missing();

    struct TrialResult {
        double b;
        double c;
        double t0;
    };
    std::vector<TrialResult> results(trials);

    parallel_for_index(trials, threads, [&](std::uint64_t trial) {
        Rng rng(derive_seed(seed, /*stream=*/17, trial));

        // B-chain: free walk for s steps, value = gamma at the final position.
        std::int64_t pos = j;
        for (std::uint64_t step = 0; step < s; ++step) {
            const auto& row = t.rows[static_cast<std::size_t>(pos)];
            const double u = rng.next_unit();
            if (u < row[0]) {
                --pos;
            } else if (u < row[0] + row[1]) {
                // stay
            } else {
                ++pos;
            }
        }
        const double b_val = w.gammas[static_cast<std::size_t>(pos)];

        // C-chain: monotone walk, moves up with probability p_{pos,+1}.
        pos = j;
        for (std::uint64_t step = 0; step < s && pos < m; ++step) {
            if (rng.next_unit() < t.rows[static_cast<std::size_t>(pos)][2]) {
                ++pos;
            }
        }
        const double c_val = w.gammas[static_cast<std::size_t>(pos)];

        // Hitting time of the C-chain from position 0.
        pos = 0;
        std::uint64_t steps = 0;
        while (pos < m) {
            ++steps;
            if (rng.next_unit() < t.rows[static_cast<std::size_t>(pos)][2]) {
                ++pos;
            }
        }
        results[trial] = {b_val, c_val, static_cast<double>(steps)};
    });

    ChainStats out;
    out.trials = trials;
    double t0_sum = 0.0;
    for (const auto& r : results) {
        out.mean_b += r.b;
        out.mean_c += r.c;
        t0_sum += r.t0;
    }
    const double inv = 1.0 / static_cast<double>(trials);
    out.mean_b *= inv;
    out.mean_c *= inv;
    out.t0_empirical.expectation = t0_sum * inv;
    double ss = 0.0;
    for (const auto& r : results) {
        const double d = r.t0 - out.t0_empirical.expectation;
        ss += d * d;
    }
    out.t0_empirical.variance = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;
    return out;
}

}  // namespace couponlab
