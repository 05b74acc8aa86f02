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

#include "ciwidth/sizer.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ciwidth/dist.hpp"
#include "ciwidth/error.hpp"
#include "ciwidth/intervals.hpp"

namespace ciwidth {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void require_sizing_args(double d0, double alpha) {
    detail::require(d0 > 0 && std::isfinite(d0), "width d0 must be finite and > 0");
    detail::require(alpha > 0 && alpha < 1, "alpha must lie in (0, 1)");
}

void require_psi(double psi0) { detail::require(psi0 > 0.5 && psi0 < 1, "power psi0 must lie in (0.5, 1)"); }

std::int64_t ceil_to_int(double v) { return static_cast<std::int64_t>(std::ceil(v)); }

double fold(double p0) { return std::min(p0, 1 - p0); }

}  // namespace

std::string family_name(const Family& family) {
    return std::visit(Overloaded{[](const NormalFamily&) { return std::string("normal"); },
                                 [](const PoissonFamily&) { return std::string("poisson"); },
                                 [](const BinomialFamily&) { return std::string("binomial"); }},
                      family);
}

void DesignSpec::validate() const {
    std::visit(Overloaded{[](const NormalFamily& f) {
                              detail::require(f.sigma > 0 && std::isfinite(f.sigma), "sigma must be finite and > 0");
                          },
                          [](const PoissonFamily& f) {
                              detail::require(f.rate > 0 && std::isfinite(f.rate), "rate must be finite and > 0");
                          },
                          [](const BinomialFamily& f) { detail::require(f.p0 > 0 && f.p0 < 1, "p0 must lie in (0, 1)"); }},
               family);
    require_sizing_args(d0, alpha);
    require_psi(psi0);
}

// ---- Normal ----

std::int64_t n_expected_normal(double sigma, double d0, double alpha) {
    require_sizing_args(d0, alpha);
    detail::require(sigma > 0, "sigma must be > 0");
    const double z = dist::std_normal_quantile(1 - alpha / 2);
    const double root = 2 * z * sigma / d0;
    return std::max<std::int64_t>(1, ceil_to_int(root * root));
}

double normal_quantile_width(std::int64_t n, double sigma, double alpha, double psi) {
    detail::require(n >= 2, "normal sizing requires N >= 2");
    const double df = static_cast<double>(n - 1);
    const double t = dist::student_t_quantile(1 - alpha / 2, df);
    return 2 * t * sigma * std::sqrt(dist::chi_square_quantile(psi, df)) / static_cast<double>(n);
}

std::int64_t n_min_normal(double sigma, double d0, double alpha, double psi0) {
    require_sizing_args(d0, alpha);
    require_psi(psi0);
    detail::require(sigma > 0, "sigma must be > 0");
    const std::int64_t start = std::max<std::int64_t>(2, n_expected_normal(sigma, d0, alpha));
    const SearchPolicy policy{start, std::max<std::int64_t>(1, (start + 9) / 10), 1};
    return find_exact_n([&](std::int64_t n) { return normal_quantile_width(n, sigma, alpha, psi0); }, d0, policy,
                        Acceptance::at_most, WidthShape::monotone, 2);
}

std::int64_t n_exact_normal(double sigma, double d0, double alpha, double psi0) {
    return n_min_normal(sigma, d0, alpha, psi0) + 1;
}

std::int64_t n_approx_normal(double sigma, double d0, double alpha, double psi0) {
    require_sizing_args(d0, alpha);
    require_psi(psi0);
    detail::require(sigma > 0, "sigma must be > 0");
    const double za = dist::std_normal_quantile(1 - alpha / 2);
    const double zb = dist::std_normal_quantile(psi0);
    const double dn = d0 / sigma;
    // The reference loop starts at floor(4 (za dn)^2); s = 0 only yields an
    // infinite width, so starting at 1 is equivalent.
    std::int64_t s = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(4 * (za * dn) * (za * dn))));
    constexpr std::int64_t kMaxN = std::int64_t{1} << 40;
    for (;;) {
        const double root = std::sqrt(2.0 * static_cast<double>(s)) + zb;
        const double qb = root * root / 2;
        const double width = 2 * za * std::sqrt(qb) / static_cast<double>(s);
        ++s;
        if (width <= dn) break;
        if (s > kMaxN) throw SearchError("approximate normal sizing did not converge");
    }
    return s + 2;
}

// ---- Poisson ----

double poisson_expected_width(std::int64_t n, double rate, double alpha) {
    detail::require(n >= 1, "poisson sizing requires N >= 1");
    const double nn = static_cast<double>(n);
    return ci::garwood_interval_at(nn * rate, alpha).width() / nn;
}

double poisson_quantile_width(std::int64_t n, double rate, double alpha, double psi) {
    detail::require(n >= 1, "poisson sizing requires N >= 1");
    const double nn = static_cast<double>(n);
    const std::int64_t x = dist::poisson_quantile(psi, nn * rate);
    return ci::garwood_rate_width(x, nn, alpha);
}

SearchPolicy default_poisson_policy(double rate, double d0) {
    detail::require(rate > 0 && d0 > 0, "poisson policy requires rate > 0 and d0 > 0");
    const std::int64_t start = std::max<std::int64_t>(1, ceil_to_int(16 * rate / (d0 * d0)));
    return {start, std::max<std::int64_t>(1, (start + 9) / 10), 1};
}

std::int64_t n_expected_poisson(double rate, double d0, double alpha, const SearchPolicy& policy) {
    require_sizing_args(d0, alpha);
    detail::require(rate > 0, "rate must be > 0");
    const std::int64_t first_ok = find_exact_n(
        [&](std::int64_t n) { return poisson_expected_width(n, rate, alpha); }, d0, policy, Acceptance::at_most,
        WidthShape::monotone);
    return std::max<std::int64_t>(1, first_ok - 1);
}

std::int64_t n_exact_poisson(double rate, double d0, double alpha, double psi0, const SearchPolicy& policy) {
    require_sizing_args(d0, alpha);
    require_psi(psi0);
    detail::require(rate > 0, "rate must be > 0");
    // The quantile count stays constant over runs of ~1/rate consecutive N.
    std::unordered_map<std::int64_t, double> count_width;
    auto width = [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const std::int64_t x = dist::poisson_quantile(psi0, nn * rate);
        auto it = count_width.find(x);
        if (it == count_width.end()) it = count_width.emplace(x, ci::garwood_interval(x, alpha).width()).first;
        return it->second / nn;
    };
    return find_exact_n(width, d0, policy, Acceptance::at_most);
}

// ---- Binomial ----

double binomial_quantile_width(std::int64_t n, double p0, double alpha, double psi) {
    detail::require(n >= 1, "binomial sizing requires N >= 1");
    const std::int64_t q = dist::binomial_quantile(psi, n, fold(p0));
    const double p_hat = std::min(0.5, static_cast<double>(q) / static_cast<double>(n));
    return ci::wilson_width(p_hat, n, alpha);
}

double binomial_expected_width(std::int64_t n, double p0, double alpha) {
    return ci::wilson_width(fold(p0), n, alpha);
}

SearchPolicy default_binomial_policy(double p0, double d0, double alpha) {
    require_sizing_args(d0, alpha);
    const double z = dist::std_normal_quantile(1 - alpha / 2);
    const double m = fold(p0);
    const std::int64_t start = std::max<std::int64_t>(1, ceil_to_int(4 * z * z * m * (1 - m) / (d0 * d0)));
    return {start, std::max<std::int64_t>(1, (start + 9) / 10), 1};
}

SearchPolicy reference_binomial_expected_policy(double p0, double d0, double alpha) {
    require_sizing_args(d0, alpha);
    const double z = dist::std_normal_quantile(1 - alpha / 2);
    return {std::max<std::int64_t>(1, ceil_to_int(z * z * p0 * (1 - p0) / d0 / d0)), 10, 1};
}

SearchPolicy reference_binomial_exact_policy() { return {5, 10, 1}; }

std::int64_t n_expected_binomial(double p0, double d0, double alpha, const SearchPolicy& policy) {
    require_sizing_args(d0, alpha);
    detail::require(p0 > 0 && p0 < 1, "p0 must lie in (0, 1)");
    return find_exact_n([&](std::int64_t n) { return binomial_expected_width(n, p0, alpha); }, d0, policy,
                        Acceptance::below, WidthShape::monotone);
}

std::int64_t n_exact_binomial(double p0, double d0, double alpha, double psi0, const SearchPolicy& policy) {
    require_sizing_args(d0, alpha);
    require_psi(psi0);
    detail::require(p0 > 0 && p0 < 1, "p0 must lie in (0, 1)");
    return find_exact_n([&](std::int64_t n) { return binomial_quantile_width(n, p0, alpha, psi0); }, d0, policy,
                        Acceptance::below);
}

SizingResult size(const DesignSpec& spec) {
    spec.validate();
    const double a = spec.alpha;
    const double psi = spec.psi0;
    const double d0 = spec.d0;
    return std::visit(
        Overloaded{
            [&](const NormalFamily& f) {
                SizingResult r;
                r.n_expected = n_expected_normal(f.sigma, d0, a);
                r.n_exact = n_exact_normal(f.sigma, d0, a, psi);
                r.n_approx = n_approx_normal(f.sigma, d0, a, psi);
                const double z = dist::std_normal_quantile(1 - a / 2);
                r.width_at_expected = 2 * z * f.sigma / std::sqrt(static_cast<double>(r.n_expected));
                r.width_at_exact = normal_quantile_width(r.n_exact, f.sigma, a, psi);
                return r;
            },
            [&](const PoissonFamily& f) {
                const SearchPolicy policy = default_poisson_policy(f.rate, d0);
                SizingResult r;
                r.n_expected = n_expected_poisson(f.rate, d0, a, policy);
                r.n_exact = n_exact_poisson(f.rate, d0, a, psi, policy);
                r.width_at_expected = poisson_expected_width(r.n_expected, f.rate, a);
                r.width_at_exact = poisson_quantile_width(r.n_exact, f.rate, a, psi);
                return r;
            },
            [&](const BinomialFamily& f) {
                const SearchPolicy policy = default_binomial_policy(f.p0, d0, a);
                SizingResult r;
                r.n_expected = n_expected_binomial(f.p0, d0, a, policy);
                r.n_exact = n_exact_binomial(f.p0, d0, a, psi, policy);
                r.width_at_expected = binomial_expected_width(r.n_expected, f.p0, a);
                r.width_at_exact = binomial_quantile_width(r.n_exact, f.p0, a, psi);
                return r;
            }},
        spec.family);
}

}  // namespace ciwidth
