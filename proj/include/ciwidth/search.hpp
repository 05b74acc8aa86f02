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
#include <functional>

namespace ciwidth {

// Coarse-then-fine integer search parameters.
struct SearchPolicy {
    std::int64_t start = 1;  // initial N
    std::int64_t jump = 1;   // coarse increment
    std::int64_t step = 1;   // fine decrement

    void validate() const;
};

// How a width is compared with the required width d0.
enum class Acceptance {
    at_most,  // width <= d0
    below,    // width < d0
};

// What the caller knows about width(N) near the threshold.
enum class WidthShape {
    monotone,  // nonincreasing in N: the fine phase may bisect
    sawtooth,  // eventually decreasing with local jumps: the fine phase walks
};

struct SearchLimits {
    std::int64_t max_n = std::int64_t{1} << 40;
    std::int64_t max_evaluations = 20'000'000;
};

// Smallest N such that width(M) is accepted for every M in [N, top], where
// `top` is the point the coarse phase stopped at.
//
// The coarse phase climbs from policy.start in increments of policy.jump
// until a width is accepted, then overshoots by max(jump, ceil(N / 4)) and
// keeps climbing until that point is accepted too. The fine phase walks
// back down by policy.step until a width is rejected and finishes with unit
// steps inside the last stride. Widths evaluated at a sample size that is
// a psi-quantile of a discrete statistic are sawtooth-shaped near the
// threshold; the overshoot is what makes the answer independent of jump.
// For WidthShape::monotone the fine phase bisects between the last rejected
// point and the top instead, which gives the same N in O(log) evaluations.
//
// Throws SearchError when limits are exceeded.
std::int64_t find_exact_n(const std::function<double(std::int64_t)>& width, double d0, const SearchPolicy& policy,
                          Acceptance acceptance = Acceptance::at_most,
                          WidthShape shape = WidthShape::sawtooth, std::int64_t lower_bound = 1,
                          const SearchLimits& limits = {});

}  // namespace ciwidth
