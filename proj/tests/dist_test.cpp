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

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "ciwidth/dist.hpp"
#include "ciwidth/error.hpp"
#include "doctest.h"

using namespace ciwidth;
namespace bm = boost::math;

namespace {

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_SUITE("dist") {

TEST_CASE("normal quantile reference values") {
    CHECK(dist::std_normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-13));
    CHECK(dist::std_normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(dist::std_normal_quantile(0.8) == doctest::Approx(0.8416212335729143).epsilon(1e-13));
    CHECK(dist::std_normal_quantile(1e-300) == doctest::Approx(-37.0471).epsilon(1e-5));
    CHECK_THROWS_AS(dist::std_normal_quantile(0.0), InfiniteResult);
    CHECK_THROWS_AS(dist::std_normal_quantile(1.0), InfiniteResult);
    CHECK_THROWS_AS(dist::std_normal_quantile(1.5), DomainError);
    CHECK_THROWS_AS(dist::std_normal_quantile(std::nan("")), DomainError);
}

TEST_CASE("normal quantile is antisymmetric") {
    for (double p = 0.001; p < 0.5; p += 0.00713) {
        CHECK(dist::std_normal_quantile(p) == doctest::Approx(-dist::std_normal_quantile(1 - p)).epsilon(1e-12));
    }
}

TEST_CASE("student t closed forms") {
    // df = 1 is Cauchy, df = 2 has an algebraic quantile
    for (double p : {0.6, 0.8, 0.9, 0.95, 0.975, 0.995}) {
        CHECK(dist::student_t_quantile(p, 1) == doctest::Approx(std::tan(M_PI * (p - 0.5))).epsilon(1e-12));
        const double t2 = (2 * p - 1) / std::sqrt(2 * p * (1 - p));
        CHECK(dist::student_t_quantile(p, 2) == doctest::Approx(t2).epsilon(1e-12));
    }
    CHECK(dist::student_t_quantile(0.975, 3) == doctest::Approx(3.182446305284263).epsilon(1e-12));
    CHECK(dist::student_t_quantile(0.975, 72) == doctest::Approx(1.993463567).epsilon(1e-9));
    CHECK_THROWS_AS(dist::student_t_quantile(0.975, 0.5), DomainError);
}

TEST_CASE("chi-square closed forms") {
    // df = 2 is exponential with mean 2
    for (double p : {0.01, 0.2, 0.5, 0.8, 0.975, 0.999}) {
        CHECK(dist::chi_square_quantile(p, 2) == doctest::Approx(-2 * std::log1p(-p)).epsilon(1e-12));
        CHECK(dist::chi_square_cdf(-2 * std::log1p(-p), 2) == doctest::Approx(p).epsilon(1e-13));
    }
    CHECK(dist::chi_square_quantile(0.975, 2) == doctest::Approx(7.377758908227871).epsilon(1e-12));
    CHECK(dist::chi_square_quantile(0.5, 0) == 0.0);
    CHECK_THROWS_AS(dist::chi_square_quantile(0.0, 3), DomainError);
}

TEST_CASE("continuous distributions agree with Boost.Math") {
    for (double df : {1.0, 2.5, 7.0, 30.0, 161.0, 4009.0, 1e5}) {
        bm::students_t t(df);
        bm::chi_squared c(df);
        for (double p : {1e-6, 0.025, 0.05, 0.1, 0.5, 0.8, 0.9, 0.95, 0.975, 0.999999}) {
            CHECK(close_rel(dist::student_t_quantile(p, df), bm::quantile(t, p), 1e-10));
            CHECK(close_rel(dist::chi_square_quantile(p, df), bm::quantile(c, p), 1e-10));
        }
        for (double x : {0.3, 1.0, 2.0, 5.0}) {
            CHECK(close_rel(dist::student_t_cdf(x, df), bm::cdf(t, x), 1e-12));
            CHECK(close_rel(dist::chi_square_cdf(x * df, df), bm::cdf(c, x * df), 1e-12));
        }
    }
}

TEST_CASE("incomplete gamma and beta agree with Boost.Math") {
    for (double a : {0.5, 1.0, 3.7, 40.0, 1000.0, 2e5}) {
        for (double r : {0.1, 0.9, 1.0, 1.1, 3.0}) {
            const double x = a * r;
            CHECK(close_rel(dist::gamma_p(a, x), bm::gamma_p(a, x), 1e-11));
            CHECK(close_rel(dist::gamma_q(a, x), bm::gamma_q(a, x), 1e-11));
        }
    }
    for (double a : {0.5, 2.0, 17.0, 400.0}) {
        for (double b : {0.5, 3.0, 90.0, 1500.0}) {
            for (double x : {0.001, 0.1, 0.3, 0.5, 0.77, 0.999}) {
                CHECK(close_rel(dist::beta_inc(a, b, x), bm::ibeta(a, b, x), 1e-11));
            }
        }
    }
}

TEST_CASE("continuous quantiles invert their CDFs") {
    for (double df : {1.0, 4.0, 50.0, 3000.0}) {
        for (double p = 0.01; p < 1; p += 0.049) {
            CHECK(dist::student_t_cdf(dist::student_t_quantile(p, df), df) == doctest::Approx(p).epsilon(1e-12));
            CHECK(dist::chi_square_cdf(dist::chi_square_quantile(p, df), df) == doctest::Approx(p).epsilon(1e-12));
        }
    }
}

TEST_CASE("continuous quantiles are increasing in p") {
    double prev_t = -std::numeric_limits<double>::infinity();
    double prev_c = 0;
    for (double p = 0.005; p < 1; p += 0.005) {
        const double t = dist::student_t_quantile(p, 9);
        const double c = dist::chi_square_quantile(p, 9);
        CHECK(t > prev_t);
        CHECK(c > prev_c);
        prev_t = t;
        prev_c = c;
    }
}

TEST_CASE("discrete reference values") {
    CHECK(dist::poisson_cdf(1, 1.0) == doctest::Approx(0.7357588823428847).epsilon(1e-14));
    CHECK(dist::poisson_quantile(0.8, 1.0) == 2);
    CHECK(dist::poisson_quantile(0.8, 410.64) == 428);
    CHECK(dist::binomial_quantile(0.8, 20, 0.25) == 7);
    CHECK(dist::binomial_quantile(0.9, 302, 0.25) == 85);
    CHECK(dist::binomial_quantile(0.9, 10, 0.0) == 0);
    CHECK(dist::binomial_quantile(0.1, 10, 1.0) == 10);
}

TEST_CASE("discrete distributions agree with Boost.Math") {
    for (double lambda : {0.3, 4.0, 29.5, 410.64, 1.6e4}) {
        bm::poisson_distribution<> d(lambda);
        for (auto k : {0.0, 1.0, std::floor(lambda), std::floor(lambda + 3 * std::sqrt(lambda))}) {
            const auto ki = static_cast<std::int64_t>(k);
            CHECK(close_rel(dist::poisson_pmf(ki, lambda), bm::pdf(d, k), 1e-11));
            CHECK(close_rel(dist::poisson_cdf(ki, lambda), bm::cdf(d, k), 1e-11));
        }
    }
    for (std::int64_t n : {1, 20, 302, 5000}) {
        for (double p : {0.0625, 0.25, 0.5, 0.9}) {
            bm::binomial_distribution<> d(static_cast<double>(n), p);
            for (std::int64_t k : {std::int64_t{0}, n / 3, n / 2, n}) {
                CHECK(close_rel(dist::binomial_pmf(k, n, p), bm::pdf(d, static_cast<double>(k)), 1e-11));
                CHECK(close_rel(dist::binomial_cdf(k, n, p), bm::cdf(d, static_cast<double>(k)), 1e-11));
            }
        }
    }
}

TEST_CASE("discrete quantiles are minimal on a 200-point grid") {
    for (int i = 0; i < 200; ++i) {
        const double p = (i + 0.5) / 200.0;
        const double lambda = 0.05 * std::pow(1.07, i);
        const std::int64_t q = dist::poisson_quantile(p, lambda);
        CHECK(dist::poisson_cdf(q, lambda) >= p);
        if (q > 0) CHECK(dist::poisson_cdf(q - 1, lambda) < p);

        const std::int64_t n = 1 + 7 * i;
        const double pb = 0.02 + 0.96 * ((i * 37) % 200) / 200.0;
        const std::int64_t qb = dist::binomial_quantile(p, n, pb);
        CHECK(dist::binomial_cdf(qb, n, pb) >= p);
        if (qb > 0) CHECK(dist::binomial_cdf(qb - 1, n, pb) < p);
    }
}

TEST_CASE("discrete domain errors") {
    CHECK_THROWS_AS(dist::poisson_cdf(1, -1.0), DomainError);
    CHECK_THROWS_AS(dist::poisson_quantile(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(dist::binomial_cdf(1, -3, 0.5), DomainError);
    CHECK_THROWS_AS(dist::binomial_quantile(0.5, 10, 1.5), DomainError);
    CHECK_THROWS_AS(dist::poisson_quantile(-0.1, 2.0), DomainError);
}

}
