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

#include "ciwidth/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ciwidth/error.hpp"

namespace ciwidth {

void SearchPolicy::validate() const {
    detail::require(start >= 1, "search policy requires start >= 1");
    detail::require(step >= 1, "search policy requires step >= 1");
    detail::require(jump >= step, "search policy requires jump >= step");
}

std::int64_t find_exact_n(const std::function<double(std::int64_t)>& width, double d0, const SearchPolicy& policy,
                          Acceptance acceptance, WidthShape shape, std::int64_t lower_bound,
                          const SearchLimits& limits) {
    policy.validate();
    detail::require(d0 > 0 && std::isfinite(d0), "required width d0 must be finite and > 0");
    detail::require(lower_bound >= 1, "search lower bound must be >= 1");

    std::int64_t evaluations = 0;
    auto accepted = [&](std::int64_t n) {
        if (++evaluations > limits.max_evaluations) {
            throw SearchError("sample-size search exceeded " + std::to_string(limits.max_evaluations) +
                              " width evaluations");
        }
        const double w = width(n);
        return acceptance == Acceptance::at_most ? w <= d0 : w < d0;
    };
    auto climb_to = [&](std::int64_t n) {
        if (n > limits.max_n) {
            throw SearchError("sample-size search passed N = " + std::to_string(limits.max_n) +
                              " without reaching the required width");
        }
        return n;
    };

    std::int64_t lo = lower_bound - 1;  // rejected, or below the domain
    std::int64_t top = std::max(policy.start, lower_bound);
    for (;;) {
        while (!accepted(top)) {
            lo = top;
            top = climb_to(top + policy.jump);
        }
        if (shape == WidthShape::monotone) break;
        const std::int64_t overshoot = std::max(policy.jump, (top + 3) / 4);
        top = climb_to(top + overshoot);
        if (accepted(top)) break;
    }

    std::int64_t hi = top;  // accepted
    if (shape == WidthShape::monotone) {
        if (lo < lower_bound) {
            // Nothing rejected yet: walk down in doubling strides to bracket.
            std::int64_t stride = policy.step;
            for (;;) {
                const std::int64_t next = hi - stride;
                if (next < lower_bound) break;
                if (!accepted(next)) {
                    lo = next;
                    break;
                }
                hi = next;
                stride *= 2;
            }
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (accepted(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return hi;
    }

    lo = lower_bound - 1;
    while (hi - policy.step >= lower_bound) {
        const std::int64_t next = hi - policy.step;
        if (!accepted(next)) {
            lo = next;
            break;
        }
        hi = next;
    }
    while (hi - 1 > lo && accepted(hi - 1)) --hi;
    return hi;
}

}  // namespace ciwidth
