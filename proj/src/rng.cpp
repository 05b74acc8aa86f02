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

#include "ciwidth/rng.hpp"

#include <cmath>

#include "ciwidth/error.hpp"

namespace ciwidth::rng {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t index) {
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t index) {
    auto seq = make_seed_seq(seed, index);
    engine_.seed(seq);
}

double Stream::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::normal() {
    for (;;) {
        const double u = 2 * uniform() - 1;
        const double v = 2 * uniform() - 1;
        const double s = u * u + v * v;
        if (s > 0 && s < 1) return u * std::sqrt(-2 * std::log(s) / s);
    }
}

double Stream::gamma(double shape) {
    detail::require(shape > 0, "gamma variate requires shape > 0");
    if (shape < 1) {
        // Gamma(a) = Gamma(a + 1) U^(1/a)
        return gamma(shape + 1) * std::pow(uniform(), 1 / shape);
    }
    const double d = shape - 1.0 / 3;
    const double c = 1 / std::sqrt(9 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1 + c * x;
        } while (v <= 0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1 - v + std::log(v))) return d * v;
    }
}

double Stream::chi_square(double df) {
    detail::require(df > 0, "chi-square variate requires df > 0");
    return 2 * gamma(0.5 * df);
}

std::int64_t Stream::poisson(double lambda) {
    detail::require(lambda >= 0 && std::isfinite(lambda), "poisson variate requires finite lambda >= 0");
    if (lambda == 0) return 0;
    if (lambda < 30) {
        const double u = uniform();
        double p = std::exp(-lambda);
        double cdf = p;
        std::int64_t x = 0;
        while (u > cdf) {
            ++x;
            p *= lambda / static_cast<double>(x);
            cdf += p;
            if (p == 0) break;  // u within rounding of 1
        }
        return x;
    }
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2);
    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -lambda + k * loglam - std::lgamma(k + 1)) {
            return static_cast<std::int64_t>(k);
        }
    }
}

std::int64_t Stream::binomial(std::int64_t n, double p) {
    detail::require(n >= 0, "binomial variate requires n >= 0");
    detail::require(p >= 0 && p <= 1, "binomial variate requires p in [0, 1]");
    if (n == 0 || p == 0) return 0;
    if (p == 1) return n;
    if (p > 0.5) return n - binomial(n, 1 - p);
    if (static_cast<double>(n) * p < 14) return binomial_inversion(n, p);
    return binomial_btrs(n, p);
}

std::int64_t Stream::binomial_inversion(std::int64_t n, double p) {
    const double q = 1 - p;
    const double s = p / q;
    const double a = static_cast<double>(n + 1) * s;
    for (;;) {
        double r = std::pow(q, static_cast<double>(n));
        double u = uniform();
        std::int64_t x = 0;
        while (u > r) {
            u -= r;
            ++x;
            if (x > n) break;
            r *= a / static_cast<double>(x) - s;
        }
        if (x <= n) return x;
    }
}

std::int64_t Stream::binomial_btrs(std::int64_t n, double p) {
    const double nn = static_cast<double>(n);
    const double q = 1 - p;
    const double spq = std::sqrt(nn * p * q);
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = nn * p + 0.5;
    const double vr = 0.92 - 4.2 / b;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / q);
    const double m = std::floor((nn + 1) * p);
    const double h = std::lgamma(m + 1) + std::lgamma(nn - m + 1);
    for (;;) {
        const double u = uniform() - 0.5;
        double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2 * a / us + b) * u + c);
        if (k < 0 || k > nn) continue;
        if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
        v = std::log(v * alpha / (a / (us * us) + b));
        if (v <= h - std::lgamma(k + 1) - std::lgamma(nn - k + 1) + (k - m) * lpq) {
            return static_cast<std::int64_t>(k);
        }
    }
}

}  // namespace ciwidth::rng
