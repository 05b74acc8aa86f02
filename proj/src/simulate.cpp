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

#include "ciwidth/simulate.hpp"

#include <cmath>
#include <unordered_map>

#include "ciwidth/dist.hpp"
#include "ciwidth/error.hpp"
#include "ciwidth/intervals.hpp"
#include "ciwidth/rng.hpp"

namespace ciwidth {

namespace {

struct Counts {
    std::uint64_t covered = 0;
    std::uint64_t narrow = 0;
};

struct Outcome {
    bool covered;
    bool narrow;
};

struct NoScratch {};

struct NormalKernel {
    using Scratch = NoScratch;
    double sigma;
    double n;
    double t;
    double d0;

    Outcome operator()(rng::Stream& s, Scratch&) const {
        const double se = sigma * std::sqrt(s.chi_square(n)) / n;
        const double mean = s.normal() * sigma / std::sqrt(n);
        const double lo = mean - se * t;
        const double up = mean + se * t;
        return {lo <= 0 && 0 <= up, (up - lo) < d0};
    }
};

struct PoissonKernel {
    // Garwood intervals per count, reused within a block.
    using Scratch = std::unordered_map<std::int64_t, ci::Interval>;
    double rate;
    double n;
    double alpha;
    double d0;

    Outcome operator()(rng::Stream& s, Scratch& cache) const {
        const std::int64_t x = s.poisson(rate * n);
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, ci::garwood_interval(x, alpha)).first;
        const ci::Interval ci{it->second.lower / n, it->second.upper / n};
        return {ci.strictly_contains(rate), ci.width() < d0};
    }
};

struct BinomialKernel {
    using Scratch = NoScratch;
    double p0;
    std::int64_t n;
    double alpha;
    double d0;

    Outcome operator()(rng::Stream& s, Scratch&) const {
        const ci::Interval ci = ci::wilson_interval(s.binomial(n, p0), n, alpha);
        return {ci.strictly_contains(p0), ci.width() < d0};
    }
};

template <class Kernel>
Counts run_block(const Kernel& kernel, std::uint64_t seed, std::uint64_t block, std::uint64_t nsim) {
    const std::uint64_t begin = block * kReplicationBlock;
    const std::uint64_t end = std::min(nsim, begin + kReplicationBlock);
    rng::Stream stream(seed, block);
    typename Kernel::Scratch scratch;
    Counts c;
    for (std::uint64_t i = begin; i < end; ++i) {
        const Outcome o = kernel(stream, scratch);
        c.covered += o.covered;
        c.narrow += o.narrow;
    }
    return c;
}

std::uint64_t block_count(std::uint64_t nsim) { return (nsim + kReplicationBlock - 1) / kReplicationBlock; }

template <class Kernel>
Counts run_serial(const Kernel& kernel, std::uint64_t seed, std::uint64_t nsim) {
    Counts total;
    for (std::uint64_t b = 0; b < block_count(nsim); ++b) {
        const Counts c = run_block(kernel, seed, b, nsim);
        total.covered += c.covered;
        total.narrow += c.narrow;
    }
    return total;
}

template <class Kernel>
Counts run_parallel(const Kernel& kernel, std::uint64_t seed, std::uint64_t nsim) {
    const auto blocks = static_cast<std::int64_t>(block_count(nsim));
    std::uint64_t covered = 0;
    std::uint64_t narrow = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : covered, narrow)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const Counts c = run_block(kernel, seed, static_cast<std::uint64_t>(b), nsim);
        covered += c.covered;
        narrow += c.narrow;
    }
    return {covered, narrow};
}

SimReport make_report(const SimConfig& cfg, Counts c) {
    const double total = static_cast<double>(cfg.nsim);
    return {static_cast<double>(c.covered) / total, static_cast<double>(c.narrow) / total, cfg.nsim, cfg.seed,
            c.covered, c.narrow};
}

void require_common(const SimConfig& cfg) {
    detail::require(cfg.nsim >= 1, "nsim must be >= 1");
    detail::require(cfg.spec.alpha > 0 && cfg.spec.alpha < 1, "alpha must lie in (0, 1)");
    detail::require(cfg.spec.d0 > 0, "width d0 must be > 0");
}

template <class Family>
const Family& family_of(const SimConfig& cfg, const char* what) {
    const auto* f = std::get_if<Family>(&cfg.spec.family);
    if (f == nullptr) detail::domain_fail(what);
    return *f;
}

NormalKernel normal_kernel(const SimConfig& cfg) {
    require_common(cfg);
    const auto& f = family_of<NormalFamily>(cfg, "simulate_normal requires a Normal design");
    detail::require(cfg.n >= 2, "normal simulation requires n >= 2");
    detail::require(f.sigma >= 0 && std::isfinite(f.sigma), "sigma must be finite and >= 0");
    const double n = static_cast<double>(cfg.n);
    return {f.sigma, n, dist::student_t_quantile(1 - cfg.spec.alpha / 2, n - 1), cfg.spec.d0};
}

PoissonKernel poisson_kernel(const SimConfig& cfg) {
    require_common(cfg);
    const auto& f = family_of<PoissonFamily>(cfg, "simulate_poisson requires a Poisson design");
    detail::require(cfg.n >= 1, "poisson simulation requires n >= 1");
    detail::require(f.rate > 0, "rate must be > 0");
    const double lambda = f.rate * static_cast<double>(cfg.n);
    detail::require(std::isfinite(lambda) && lambda <= 1e12, "expected count rate * n must not exceed 1e12");
    return {f.rate, static_cast<double>(cfg.n), cfg.spec.alpha, cfg.spec.d0};
}

BinomialKernel binomial_kernel(const SimConfig& cfg) {
    require_common(cfg);
    const auto& f = family_of<BinomialFamily>(cfg, "simulate_binomial requires a Binomial design");
    detail::require(cfg.n >= 1, "binomial simulation requires n >= 1");
    detail::require(f.p0 >= 0 && f.p0 <= 1, "p0 must lie in [0, 1]");
    return {f.p0, cfg.n, cfg.spec.alpha, cfg.spec.d0};
}

}  // namespace

SimReport simulate_normal(const SimConfig& cfg) {
    return make_report(cfg, run_parallel(normal_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate_poisson(const SimConfig& cfg) {
    return make_report(cfg, run_parallel(poisson_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate_binomial(const SimConfig& cfg) {
    return make_report(cfg, run_parallel(binomial_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate(const SimConfig& cfg) {
    if (std::holds_alternative<NormalFamily>(cfg.spec.family)) return simulate_normal(cfg);
    if (std::holds_alternative<PoissonFamily>(cfg.spec.family)) return simulate_poisson(cfg);
    return simulate_binomial(cfg);
}

namespace serial {

SimReport simulate_normal(const SimConfig& cfg) {
    return make_report(cfg, run_serial(normal_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate_poisson(const SimConfig& cfg) {
    return make_report(cfg, run_serial(poisson_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate_binomial(const SimConfig& cfg) {
    return make_report(cfg, run_serial(binomial_kernel(cfg), cfg.seed, cfg.nsim));
}

SimReport simulate(const SimConfig& cfg) {
    if (std::holds_alternative<NormalFamily>(cfg.spec.family)) return serial::simulate_normal(cfg);
    if (std::holds_alternative<PoissonFamily>(cfg.spec.family)) return serial::simulate_poisson(cfg);
    return serial::simulate_binomial(cfg);
}

}  // namespace serial

}  // namespace ciwidth
