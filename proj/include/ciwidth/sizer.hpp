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
#include <optional>
#include <string>
#include <variant>

#include "ciwidth/search.hpp"

namespace ciwidth {

struct NormalFamily {
    double sigma = 1;
};

struct PoissonFamily {
    double rate = 0;
};

struct BinomialFamily {
    double p0 = 0.5;
};

using Family = std::variant<NormalFamily, PoissonFamily, BinomialFamily>;

std::string family_name(const Family& family);

// Everything that defines a sizing problem.
struct DesignSpec {
    Family family;
    double alpha = 0.05;  // 1 - confidence level
    double psi0 = 0.8;    // required P(width < d0), the "power"
    double d0 = 0;        // required full width

    // Throws DomainError naming the first violated invariant.
    void validate() const;
};

struct SizingResult {
    std::int64_t n_expected = 0;
    std::int64_t n_exact = 0;
    std::optional<std::int64_t> n_approx;
    double width_at_expected = 0;  // plug-in width at n_expected
    double width_at_exact = 0;     // psi0-quantile width at n_exact
};

// ---- Normal mean, Student-t interval, s^2 = Q / N ----

// ceil((2 z sigma / d0)^2)
std::int64_t n_expected_normal(double sigma, double d0, double alpha);

// Width at the psi-quantile of s: 2 t(1 - alpha/2, N-1) sigma sqrt(chi2(psi, N-1)) / N.
double normal_quantile_width(std::int64_t n, double sigma, double alpha, double psi);

// Smallest N >= 2 whose psi0-quantile width is at most d0.
std::int64_t n_min_normal(double sigma, double d0, double alpha, double psi0);

// The tabulated exact size: n_min_normal + 1, the value the reference
// sizing loop reports (it increments once more after the width drops).
std::int64_t n_exact_normal(double sigma, double d0, double alpha, double psi0);

// n_exact_normal with chi2(psi, n) replaced by ((sqrt(2n) + z_psi)^2) / 2
// and the t quantile by z; scans up from floor(4 (z d0/sigma)^2) and adds 2.
std::int64_t n_approx_normal(double sigma, double d0, double alpha, double psi0);

// ---- Poisson rate, Garwood interval ----

// Garwood rate width at the real-valued expected count N * rate.
double poisson_expected_width(std::int64_t n, double rate, double alpha);
// Garwood rate width at x = poisson_quantile(psi, N * rate).
double poisson_quantile_width(std::int64_t n, double rate, double alpha, double psi);

// start = ceil(16 rate / d0^2), jump = ceil(start / 10), step = 1.
SearchPolicy default_poisson_policy(double rate, double d0);

// Largest N whose expected-count width still exceeds d0 (the reference
// routine returns the last failing N, one below the first passing one).
std::int64_t n_expected_poisson(double rate, double d0, double alpha, const SearchPolicy& policy);
std::int64_t n_exact_poisson(double rate, double d0, double alpha, double psi0, const SearchPolicy& policy);

// ---- Binomial proportion, Wilson interval; p0 > 0.5 folds to 1 - p0 ----

// Wilson width at the worst statistic of the one-interval set R0:
// p = min(0.5, binomial_quantile(psi, N, min(p0, 1-p0)) / N).
double binomial_quantile_width(std::int64_t n, double p0, double alpha, double psi);
double binomial_expected_width(std::int64_t n, double p0, double alpha);

// start = ceil((2z)^2 p0 (1-p0) / d0^2), jump = max(1, ceil(start / 10)), step = 1.
SearchPolicy default_binomial_policy(double p0, double d0, double alpha);
// The policies the published tables were produced with.
SearchPolicy reference_binomial_expected_policy(double p0, double d0, double alpha);
SearchPolicy reference_binomial_exact_policy();

std::int64_t n_expected_binomial(double p0, double d0, double alpha, const SearchPolicy& policy);
std::int64_t n_exact_binomial(double p0, double d0, double alpha, double psi0, const SearchPolicy& policy);

// Validates the spec, then runs the family's expected/exact (and approximate,
// Normal only) sizing with default search policies.
SizingResult size(const DesignSpec& spec);

}  // namespace ciwidth
