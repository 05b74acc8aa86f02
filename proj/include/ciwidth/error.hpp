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

#include <stdexcept>
#include <string>

namespace ciwidth {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Result would be infinite, e.g. a quantile at probability 0 or 1.
class InfiniteResult : public std::range_error {
  public:
    using std::range_error::range_error;
};

// Integer sample-size search failed to bracket a solution within its caps.
class SearchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void domain_fail(const std::string& what) { throw DomainError(what); }

inline void require(bool ok, const char* what) {
    if (!ok) domain_fail(what);
}

}  // namespace detail

}  // namespace ciwidth
