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

// CDFs and quantiles for the Normal, Student t, chi-square, Poisson and
// Binomial distributions. Everything here is a pure function.
//
// Continuous quantiles are accurate to ~1e-13 in probability space; the
// sample-size searches compare widths against thresholds and an
// inaccurate quantile shows up as an off-by-one sample size.
namespace ciwidth::dist {

// Regularized lower/upper incomplete gamma P(a, x), Q(a, x); a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b). `y` must equal 1 - x; passing it
// separately keeps precision when x is close to 1.
double beta_inc(double a, double b, double x, double y);
double beta_inc(double a, double b, double x);

double std_normal_cdf(double z);
double std_normal_quantile(double p);

double student_t_cdf(double t, double df);
double student_t_quantile(double p, double df);

// df == 0 is the point mass at zero.
double chi_square_cdf(double x, double df);
double chi_square_quantile(double p, double df);

double poisson_pmf(std::int64_t k, double lambda);
double poisson_cdf(std::int64_t k, double lambda);
// Smallest q with poisson_cdf(q, lambda) >= p.
std::int64_t poisson_quantile(double p, double lambda);

double binomial_pmf(std::int64_t k, std::int64_t n, double p);
double binomial_cdf(std::int64_t k, std::int64_t n, double p);
// Smallest q with binomial_cdf(q, n, p) >= prob.
std::int64_t binomial_quantile(double prob, std::int64_t n, double p);

}  // namespace ciwidth::dist
