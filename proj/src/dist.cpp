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

#include "ciwidth/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ciwidth/error.hpp"

namespace ciwidth::dist {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;
constexpr int kMaxTerms = 1'000'000;

// Stirling remainder: lgamma(x + 1) - [(x + 1/2) ln x - x + ln sqrt(2 pi)].
double stirlerr(double x) {
    constexpr double s0 = 1.0 / 12;
    constexpr double s1 = 1.0 / 360;
    constexpr double s2 = 1.0 / 1260;
    constexpr double s3 = 1.0 / 1680;
    constexpr double s4 = 1.0 / 1188;
    if (x <= 15.0) {
        return std::lgamma(x + 1.0) - (x + 0.5) * std::log(x) + x - kLnSqrt2Pi;
    }
    const double xx = x * x;
    if (x > 500) return (s0 - s1 / xx) / x;
    if (x > 80) return (s0 - (s1 - s2 / xx) / xx) / x;
    if (x > 35) return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
    return (s0 - (s1 - (s2 - (s3 - s4 / xx) / xx) / xx) / xx) / x;
}

// Deviance term x ln(x / np) + np - x, evaluated without cancellation.
double bd0(double x, double np) {
    if (std::abs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double s = (x - np) * v;
        double ej = 2 * x * v;
        const double v2 = v * v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v2;
            const double s1 = s + ej / (2 * j + 1);
            if (s1 == s) return s1;
            s = s1;
        }
        return s;
    }
    return x * std::log(x / np) + np - x;
}

// lambda^x e^-lambda / Gamma(x + 1) for real x >= 0.
double dpois_raw(double x, double lambda) {
    if (lambda == 0) return x == 0 ? 1.0 : 0.0;
    if (x < 0 || !std::isfinite(lambda)) return 0.0;
    if (x == 0) return std::exp(-lambda);
    return std::exp(-stirlerr(x) - bd0(x, lambda)) / std::sqrt(2 * std::numbers::pi * x);
}

// Gamma(n + 1) / (Gamma(x + 1) Gamma(n - x + 1)) p^x q^(n-x), real x and n.
double dbinom_raw(double x, double n, double p, double q) {
    if (p == 0) return x == 0 ? 1.0 : 0.0;
    if (q == 0) return x == n ? 1.0 : 0.0;
    if (x == 0) {
        if (n == 0) return 1.0;
        const double lc = p < 0.1 ? -bd0(n, n * q) - n * p : n * std::log(q);
        return std::exp(lc);
    }
    if (x == n) {
        const double lc = q < 0.1 ? -bd0(n, n * p) - n * q : n * std::log(p);
        return std::exp(lc);
    }
    if (x < 0 || x > n) return 0.0;
    const double lc = stirlerr(n) - stirlerr(x) - stirlerr(n - x) - bd0(x, n * p) - bd0(n - x, n * q);
    const double lf = 2 * kLnSqrt2Pi + std::log(x) + std::log1p(-x / n);
    return std::exp(lc - 0.5 * lf);
}

// Series for P(a, x); converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double sum = 1.0;
    double term = 1.0;
    for (int n = 1; n < kMaxTerms; ++n) {
        term *= x / (a + n);
        sum += term;
        if (term < sum * kEps) break;
    }
    return dpois_raw(a, x) * sum;
}

// Continued fraction for Q(a, x) (modified Lentz); use for x >= a + 1.
double gamma_q_fraction(double a, double x) {
    double b = x + 1 - a;
    double c = 1 / kTiny;
    double d = 1 / b;
    double h = d;
    for (int i = 1; i < kMaxTerms; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1) < kEps) break;
    }
    return a * dpois_raw(a, x) * h;
}

// Continued fraction for I_x(a, b) without the x^a y^b / (a B(a,b)) prefactor.
double beta_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1;
    const double qam = a - 1;
    double c = 1;
    double d = 1 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1 / d;
    double h = d;
    for (int m = 1; m < kMaxTerms; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1) < kEps) break;
    }
    return h;
}

// I_x(a, b) from the continued fraction; only accurate for x < (a+1)/(a+b+2).
double beta_inc_direct(double a, double b, double x, double y) {
    // x^a y^b / B(a, b) == dbinom_raw(a; a+b, x) * a b / (a + b)
    return dbinom_raw(a, a + b, x, y) * b / (a + b) * beta_fraction(a, b, x);
}

// Root of cdf(x) = p inside [lo, hi] by Newton steps, falling back to
// bisection whenever a step leaves the bracket.
template <class Cdf, class Pdf>
double invert_cdf(double p, Cdf cdf, Pdf pdf, double lo, double hi, double x) {
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    for (int it = 0; it < 400; ++it) {
        const double f = cdf(x) - p;
        if (f == 0) return x;
        if (f < 0) {
            lo = x;
        } else {
            hi = x;
        }
        const double dens = pdf(x);
        double next = dens > 0 ? x - f / dens : lo - 1;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double scale = std::max(std::abs(x), std::abs(next));
        if (std::abs(next - x) <= 2 * kEps * scale || hi - lo <= 2 * kEps * scale) return next;
        x = next;
    }
    return x;
}

double chi_square_pdf(double x, double df) {
    if (x <= 0) return 0;
    const double k = 0.5 * df;
    return std::exp((k - 1) * std::log(x) - 0.5 * x - k * std::numbers::ln2 - std::lgamma(k));
}

double student_t_pdf(double t, double df) {
    return std::exp(std::lgamma(0.5 * (df + 1)) - std::lgamma(0.5 * df) -
                    0.5 * std::log(df * std::numbers::pi) - 0.5 * (df + 1) * std::log1p(t * t / df));
}

void require_open_probability(double p) {
    detail::require(p > 0 && p < 1, "probability must lie in (0, 1)");
}

// Smallest q in [lo_bound, hi_bound] with cdf(q) >= p, starting near `guess`.
// cdf is nondecreasing and cdf(hi_bound) >= p.
template <class Cdf>
std::int64_t discrete_quantile(double p, Cdf cdf, std::int64_t guess, std::int64_t hi_bound) {
    guess = std::clamp<std::int64_t>(guess, 0, hi_bound);
    // Invariant once bracketed: cdf(lo) < p <= cdf(hi), with lo == -1 meaning "below support".
    std::int64_t lo;
    std::int64_t hi;
    if (cdf(guess) >= p) {
        hi = guess;
        std::int64_t step = 1;
        lo = hi - step;
        while (lo >= 0 && cdf(lo) >= p) {
            hi = lo;
            step *= 2;
            lo = hi - step;
        }
        lo = std::max<std::int64_t>(lo, -1);
    } else {
        lo = guess;
        std::int64_t step = 1;
        hi = std::min(lo + step, hi_bound);
        while (cdf(hi) < p) {
            if (hi == hi_bound) throw std::logic_error("discrete quantile exceeded support");
            lo = hi;
            step *= 2;
            hi = std::min(lo + step, hi_bound);
        }
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (cdf(mid) >= p) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

double gamma_p(double a, double x) {
    detail::require(a > 0 && x >= 0, "gamma_p requires a > 0 and x >= 0");
    if (x == 0) return 0.0;
    if (x < a + 1) return gamma_p_series(a, x);
    return 1.0 - gamma_q_fraction(a, x);
}

double gamma_q(double a, double x) {
    detail::require(a > 0 && x >= 0, "gamma_q requires a > 0 and x >= 0");
    if (x == 0) return 1.0;
    if (x < a + 1) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double beta_inc(double a, double b, double x, double y) {
    detail::require(a > 0 && b > 0, "beta_inc requires a > 0 and b > 0");
    detail::require(x >= 0 && x <= 1, "beta_inc requires x in [0, 1]");
    if (x == 0) return 0.0;
    if (y == 0) return 1.0;
    if (x > (a + 1) / (a + b + 2)) return 1.0 - beta_inc_direct(b, a, y, x);
    return beta_inc_direct(a, b, x, y);
}

double beta_inc(double a, double b, double x) { return beta_inc(a, b, x, 1.0 - x); }

double std_normal_cdf(double z) {
    detail::require(std::isfinite(z), "std_normal_cdf requires a finite argument");
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_quantile(double p) {
    detail::require(p >= 0 && p <= 1, "std_normal_quantile requires p in [0, 1]");
    if (p == 0 || p == 1) throw InfiniteResult("std_normal_quantile is infinite at p = 0 or 1");

    // Rational starting approximation (relative error ~1e-9), then Halley steps.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= 1 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        const double q = std::sqrt(-2 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    for (int i = 0; i < 2; ++i) {
        // Work in the smaller tail so the residual keeps its relative precision.
        const double e = x <= 0 ? 0.5 * std::erfc(-x / std::numbers::sqrt2) - p
                                : (1 - p) - 0.5 * std::erfc(x / std::numbers::sqrt2);
        const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(0.5 * x * x);
        x = x - u / (1 + 0.5 * x * u);
    }
    return x;
}

double student_t_cdf(double t, double df) {
    detail::require(df > 0, "student_t_cdf requires df > 0");
    detail::require(!std::isnan(t), "student_t_cdf requires a number");
    if (t == 0) return 0.5;
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    const double t2 = t * t;
    const double tail = 0.5 * beta_inc(0.5 * df, 0.5, df / (df + t2), t2 / (df + t2));
    return t > 0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
    require_open_probability(p);
    detail::require(df >= 1, "student_t_quantile requires df >= 1");
    if (p == 0.5) return 0.0;
    if (df == 1) return std::tan(std::numbers::pi * (p - 0.5));
    if (df == 2) return (2 * p - 1) / std::sqrt(2 * p * (1 - p));

    // Solve in the lower tail, then reflect.
    const double lower = std::min(p, 1 - p);
    const double z = std_normal_quantile(lower);
    const double z3 = z * z * z;
    const double z5 = z3 * z * z;
    const double guess = z + (z3 + z) / (4 * df) + (5 * z5 + 16 * z3 + 3 * z) / (96 * df * df);
    double lo = std::min(2 * guess, -1.0);
    while (student_t_cdf(lo, df) > lower) lo *= 2;
    const double t = invert_cdf(
        lower, [df](double v) { return student_t_cdf(v, df); }, [df](double v) { return student_t_pdf(v, df); },
        lo, 0.0, guess);
    return p < 0.5 ? t : -t;
}

double chi_square_cdf(double x, double df) {
    detail::require(df >= 0, "chi_square_cdf requires df >= 0");
    if (x <= 0) return df == 0 && x == 0 ? 1.0 : 0.0;
    if (df == 0) return 1.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double p, double df) {
    require_open_probability(p);
    detail::require(df >= 0, "chi_square_quantile requires df >= 0");
    if (df == 0) return 0.0;

    const double z = std_normal_quantile(p);
    const double h = 2.0 / (9.0 * df);
    const double wh = 1 - h + z * std::sqrt(h);
    double guess = df * wh * wh * wh;
    if (!(guess > 0) || df < 2) {
        // Lower-tail behaviour P(k, x/2) ~ (x/2)^k / Gamma(k + 1).
        const double k = 0.5 * df;
        guess = 2 * std::exp((std::log(p) + std::lgamma(k + 1)) / k);
    }
    double hi = std::max(guess, 1.0);
    while (chi_square_cdf(hi, df) < p) hi *= 2;
    return invert_cdf(
        p, [df](double v) { return chi_square_cdf(v, df); }, [df](double v) { return chi_square_pdf(v, df); }, 0.0,
        hi, std::min(guess, hi));
}

double poisson_pmf(std::int64_t k, double lambda) {
    detail::require(lambda > 0, "poisson_pmf requires lambda > 0");
    if (k < 0) return 0.0;
    return dpois_raw(static_cast<double>(k), lambda);
}

double poisson_cdf(std::int64_t k, double lambda) {
    detail::require(k >= 0, "poisson_cdf requires k >= 0");
    detail::require(lambda > 0 && std::isfinite(lambda), "poisson_cdf requires finite lambda > 0");
    return gamma_q(static_cast<double>(k) + 1, lambda);
}

std::int64_t poisson_quantile(double p, double lambda) {
    require_open_probability(p);
    detail::require(lambda > 0 && std::isfinite(lambda), "poisson_quantile requires finite lambda > 0");
    const double sigma = std::sqrt(lambda);
    const double z = std_normal_quantile(p);
    const double guess = lambda + sigma * (z + (z * z - 1) / (6 * sigma));
    return discrete_quantile(
        p, [lambda](std::int64_t k) { return poisson_cdf(k, lambda); },
        static_cast<std::int64_t>(std::max(0.0, std::floor(guess))), std::numeric_limits<std::int64_t>::max() / 4);
}

double binomial_pmf(std::int64_t k, std::int64_t n, double p) {
    detail::require(n >= 0, "binomial_pmf requires n >= 0");
    detail::require(p >= 0 && p <= 1, "binomial_pmf requires p in [0, 1]");
    if (k < 0 || k > n) return 0.0;
    return dbinom_raw(static_cast<double>(k), static_cast<double>(n), p, 1 - p);
}

double binomial_cdf(std::int64_t k, std::int64_t n, double p) {
    detail::require(n >= 0, "binomial_cdf requires n >= 0");
    detail::require(k >= 0 && k <= n, "binomial_cdf requires 0 <= k <= n");
    detail::require(p >= 0 && p <= 1, "binomial_cdf requires p in [0, 1]");
    if (k == n || p == 0) return 1.0;
    if (p == 1) return 0.0;
    // P(X <= k) = I_{1-p}(n - k, k + 1)
    return beta_inc(static_cast<double>(n - k), static_cast<double>(k) + 1, 1 - p, p);
}

std::int64_t binomial_quantile(double prob, std::int64_t n, double p) {
    require_open_probability(prob);
    detail::require(n >= 0, "binomial_quantile requires n >= 0");
    detail::require(p >= 0 && p <= 1, "binomial_quantile requires p in [0, 1]");
    if (n == 0 || p == 0) return 0;
    if (p == 1) return n;
    const double mean = static_cast<double>(n) * p;
    const double sigma = std::sqrt(mean * (1 - p));
    const double z = std_normal_quantile(prob);
    const double skew = (1 - 2 * p) / sigma;
    const double guess = mean + sigma * (z + skew * (z * z - 1) / 6);
    return discrete_quantile(
        prob, [n, p](std::int64_t k) { return binomial_cdf(k, n, p); },
        static_cast<std::int64_t>(std::max(0.0, std::floor(guess))), n);
}

}  // namespace ciwidth::dist
