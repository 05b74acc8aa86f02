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
#include <random>

namespace ciwidth::rng {

// A reproducible random substream identified by (master seed, index).
//
// Engine: std::mt19937_64 seeded through std::seed_seq with the four 32-bit
// halves of (seed, index). Both are fully specified by the standard, so a
// given (seed, index) yields the same draws on every platform. The variate
// algorithms below are implemented here for the same reason.
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t index);

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    // Standard normal, Marsaglia polar method.
    double normal();
    // Gamma(shape, 1), Marsaglia-Tsang squeeze; shape > 0.
    double gamma(double shape);
    double chi_square(double df);
    // Inversion for lambda < 30, Hormann's PTRS above.
    std::int64_t poisson(double lambda);
    // Inversion for n min(p, 1-p) < 14, Hormann's BTRS above.
    std::int64_t binomial(std::int64_t n, double p);

  private:
    std::int64_t binomial_inversion(std::int64_t n, double p);
    std::int64_t binomial_btrs(std::int64_t n, double p);

    std::mt19937_64 engine_;
};

}  // namespace ciwidth::rng
