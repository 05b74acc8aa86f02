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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ciwidth/simulate.hpp"
#include "ciwidth/sizer.hpp"

namespace ciwidth::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,     // I/O and other runtime failures
    kInvalid = 2,     // unparsable arguments or a violated domain invariant
    kNoConverge = 3,  // sample size search gave up
};

nlohmann::json to_json(const DesignSpec& spec, const SizingResult& result);
nlohmann::json to_json(const SimConfig& cfg, const SimReport& report);

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ciwidth::cli
