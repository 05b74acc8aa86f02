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

#pragma once

#include <cstdint>

namespace ciwidth::ci {

struct Interval {
    double lower = 0;
    double upper = 0;

    double width() const { return upper - lower; }
    bool contains(double v) const { return lower <= v && v <= upper; }
    // Open containment, lower < v < upper.
    bool strictly_contains(double v) const { return lower < v && v < upper; }
};

struct NormalSample {
    std::int64_t n = 2;
    double mean = 0;
    double s = 0;  // s^2 = Q / n
};

struct CountSample {
    std::int64_t x = 0;
    double exposure = 1;
};

struct ProportionSample {
    std::int64_t x = 0;
    std::int64_t n = 1;

    double p_hat() const { return static_cast<double>(x) / static_cast<double>(n); }
};

// Student-t interval for a Normal mean: m +- t(1 - alpha/2, n - 1) s / sqrt(n).
Interval normal_t_interval(const NormalSample& sample, double alpha);
// Full width 2 s t(1 - alpha/2, n - 1) / sqrt(n).
double normal_t_width(std::int64_t n, double s, double alpha);

// Garwood interval for a Poisson mean given count x:
// (chi2(alpha/2, 2x) / 2, chi2(1 - alpha/2, 2x + 2) / 2), lower bound 0 at x = 0.
Interval garwood_interval(std::int64_t x, double alpha);
// Same formula with a real-valued count, as the expected-count sizing uses.
Interval garwood_interval_at(double x, double alpha);
// Interval for the rate x / exposure.
Interval garwood_rate_interval(const CountSample& sample, double alpha);
double garwood_rate_width(std::int64_t x, double exposure, double alpha);

// Wilson score interval, clipped to [0, 1].
Interval wilson_interval(std::int64_t x, std::int64_t n, double alpha);
// 2 z sqrt(p(1-p) n + z^2/4) / (n + z^2), z = z(1 - alpha/2).
double wilson_width(double p_hat, std::int64_t n, double alpha);

// Anscombe transform pair. Not a strict inverse:
// anscombe_inverse(anscombe_forward(x)) == x + 0.25.
double anscombe_forward(double x);
double anscombe_inverse(double z);

// Normal approximation to the psi-quantile of Poisson(lambda) through the
// Anscombe transform: anscombe_inverse(anscombe_forward(lambda) + z_psi).
double approx_poisson_power_quantile(double lambda, double psi);

}  // namespace ciwidth::ci
