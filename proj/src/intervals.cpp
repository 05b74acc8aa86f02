/*
   Copyright 2026 The ciwidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ciwidth/intervals.hpp"

#include <algorithm>
#include <cmath>

#include "ciwidth/dist.hpp"
#include "ciwidth/error.hpp"

namespace ciwidth::ci {

namespace {

void require_alpha(double alpha) { detail::require(alpha > 0 && alpha < 1, "alpha must lie in (0, 1)"); }

}  // namespace

Interval normal_t_interval(const NormalSample& sample, double alpha) {
    const double half = 0.5 * normal_t_width(sample.n, sample.s, alpha);
    return {sample.mean - half, sample.mean + half};
}

double normal_t_width(std::int64_t n, double s, double alpha) {
    detail::require(n >= 2, "normal_t_width requires n >= 2");
    detail::require(s >= 0, "normal_t_width requires s >= 0");
    require_alpha(alpha);
    const double t = dist::student_t_quantile(1 - alpha / 2, static_cast<double>(n - 1));
    return 2 * s * t / std::sqrt(static_cast<double>(n));
}

Interval garwood_interval_at(double x, double alpha) {
    detail::require(x >= 0, "garwood interval requires a count >= 0");
    require_alpha(alpha);
    const double lower = x > 0 ? 0.5 * dist::chi_square_quantile(alpha / 2, 2 * x) : 0.0;
    const double upper = 0.5 * dist::chi_square_quantile(1 - alpha / 2, 2 * x + 2);
    return {lower, upper};
}

Interval garwood_interval(std::int64_t x, double alpha) {
    detail::require(x >= 0, "garwood_interval requires x >= 0");
    return garwood_interval_at(static_cast<double>(x), alpha);
}

Interval garwood_rate_interval(const CountSample& sample, double alpha) {
    detail::require(sample.exposure > 0, "exposure must be > 0");
    const Interval counts = garwood_interval(sample.x, alpha);
    return {counts.lower / sample.exposure, counts.upper / sample.exposure};
}

double garwood_rate_width(std::int64_t x, double exposure, double alpha) {
    return garwood_rate_interval({x, exposure}, alpha).width();
}

Interval wilson_interval(std::int64_t x, std::int64_t n, double alpha) {
    detail::require(n >= 1, "wilson_interval requires n >= 1");
    detail::require(x >= 0 && x <= n, "wilson_interval requires 0 <= x <= n");
    require_alpha(alpha);
    const double z = dist::std_normal_quantile(1 - alpha / 2);
    const double z2 = z * z;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(x) / nn;
    const double denom = nn + z2;
    const double center = (nn * p + z2 / 2) / denom;
    const double half = z * std::sqrt(p * (1 - p) * nn + z2 / 4) / denom;
    // the endpoints at x = 0 and x = n are exactly 0 and 1
    return {x == 0 ? 0.0 : std::max(0.0, center - half), x == n ? 1.0 : std::min(1.0, center + half)};
}

double wilson_width(double p_hat, std::int64_t n, double alpha) {
    detail::require(p_hat >= 0 && p_hat <= 1, "wilson_width requires p_hat in [0, 1]");
    detail::require(n >= 1, "wilson_width requires n >= 1");
    require_alpha(alpha);
    const double z = dist::std_normal_quantile(1 - alpha / 2);
    const double nn = static_cast<double>(n);
    return 2 * z * std::sqrt(p_hat * (1 - p_hat) * nn + z * z / 4) / (nn + z * z);
}

double anscombe_forward(double x) {
    detail::require(x >= 0, "anscombe_forward requires x >= 0");
    return 2 * std::sqrt(x + 0.375);
}

double anscombe_inverse(double z) { return z * z / 4 - 0.125; }

double approx_poisson_power_quantile(double lambda, double psi) {
    detail::require(lambda > 0, "approx_poisson_power_quantile requires lambda > 0");
    detail::require(psi > 0 && psi < 1, "psi must lie in (0, 1)");
    return anscombe_inverse(anscombe_forward(lambda) + dist::std_normal_quantile(psi));
}

}  // namespace ciwidth::ci
