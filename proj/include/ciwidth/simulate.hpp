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

#include "ciwidth/sizer.hpp"

namespace ciwidth {

struct SimConfig {
    std::uint64_t nsim = 10000;
    std::uint64_t seed = 0;
    DesignSpec spec;     // family, alpha and d0 are used; psi0 is ignored
    std::int64_t n = 0;  // sample size under test
};

struct SimReport {
    double coverage = 0;  // fraction of intervals containing the true parameter
    double power = 0;     // fraction of intervals with width < d0
    std::uint64_t nsim = 0;
    std::uint64_t seed = 0;
    std::uint64_t covered = 0;
    std::uint64_t narrow = 0;
};

// Replications are split into blocks of this many; block b draws from
// rng::Stream(seed, b). Results do not depend on the thread count.
inline constexpr std::uint64_t kReplicationBlock = 1024;

// Normal mean, true mean 0: per replication se = sigma sqrt(chi2_n) / n and
// mean = sigma Z / sqrt(n), interval mean +- t(1 - alpha/2, n - 1) se.
// The chi-square draw uses n degrees of freedom.
SimReport simulate_normal(const SimConfig& cfg);
// x ~ Poisson(rate n); Garwood interval for x scaled by 1/n.
// Coverage counts intervals with lower < rate < upper.
SimReport simulate_poisson(const SimConfig& cfg);
// x ~ Bin(n, p0); Wilson interval. Coverage counts lower < p0 < upper.
SimReport simulate_binomial(const SimConfig& cfg);
SimReport simulate(const SimConfig& cfg);

// Single-threaded reference implementations; bit-identical to the above.
namespace serial {
SimReport simulate_normal(const SimConfig& cfg);
SimReport simulate_poisson(const SimConfig& cfg);
SimReport simulate_binomial(const SimConfig& cfg);
SimReport simulate(const SimConfig& cfg);
}  // namespace serial

}  // namespace ciwidth
