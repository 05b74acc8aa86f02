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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "ciwidth/cli.hpp"
#include "doctest.h"

using namespace ciwidth;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normal sizing as text") {
    const Outcome r = invoke({"normal", "--sigma", "1", "--width", "0.5", "--alpha", "0.05", "--power", "0.8"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("expected=62 exact=73 approx=74 ", 0) == 0);
    CHECK(r.err.empty());
}

TEST_CASE("binomial sizing as json") {
    const Outcome r =
        invoke({"binomial", "--p0", "0.25", "--width", "0.1", "--alpha", "0.05", "--power", "0.9", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n_exact"] == 309);
    CHECK(j["n_expected"] == 286);
    CHECK(j["n_approx"].is_null());
    CHECK(j["family"]["name"] == "binomial");
    // parse then re-serialize is idempotent
    CHECK(nlohmann::json::parse(j.dump(2)).dump(2) + "\n" == r.out);
}

TEST_CASE("poisson sizing defaults") {
    const Outcome r = invoke({"poisson", "--rate", "0.08", "--width", "0.016", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["alpha"] == 0.05);
    CHECK(j["power"] == 0.8);
    CHECK(j["n_expected"] == 4929);
    CHECK(j["n_exact"] == 5133);
}

TEST_CASE("verify is reproducible and honours the seed variable") {
    const std::vector<std::string> args = {"verify", "--family", "poisson", "--rate",  "0.01",   "--n",
                                           "41064",  "--width",  "0.002",   "--nsim",  "2000", "--json"};
    std::vector<std::string> seeded = args;
    seeded.insert(seeded.end(), {"--seed", "42"});
    const Outcome a = invoke(seeded);
    const Outcome b = invoke(seeded);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["seed"] == 42);
    CHECK(j["nsim"] == 2000);
    CHECK(std::abs(j["coverage"].get<double>() - 0.95) < 0.03);

    setenv("CIWIDTH_SEED", "42", 1);
    const Outcome env = invoke(args);
    unsetenv("CIWIDTH_SEED");
    CHECK(env.out == a.out);
}

TEST_CASE("verify needs the family parameter") {
    const Outcome r = invoke({"verify", "--family", "normal", "--n", "73", "--width", "0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--sigma") != std::string::npos);
}

TEST_CASE("validation errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"normal", "--sigma", "1"}).code == 2);
    CHECK(invoke({"normal", "--sigma", "1", "--width", "0.5", "--bogus"}).code == 2);
    CHECK(invoke({"normal", "--sigma", "abc", "--width", "0.5"}).code == 2);
    const Outcome power = invoke({"normal", "--sigma", "1", "--width", "0.5", "--power", "0.4"});
    CHECK(power.code == 2);
    CHECK(power.err.find("psi0") != std::string::npos);
    CHECK(invoke({"binomial", "--p0", "1.2", "--width", "0.1"}).code == 2);
    CHECK(invoke({"verify", "--family", "gamma", "--n", "5", "--width", "1"}).code == 2);
    CHECK(invoke({"table", "4"}).code == 2);
    CHECK(invoke({"table", "1", "--depth", "0"}).code == 2);
}

TEST_CASE("non-convergent searches exit with 3") {
    // a width this small needs more than 2^40 observations
    const Outcome r = invoke({"normal", "--sigma", "1", "--width", "1e-7"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help goes to stdout") {
    const Outcome r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("table writes both files") {
    const auto dir = std::filesystem::temp_directory_path() / "ciwidth_cli_test";
    std::filesystem::remove_all(dir);
    const Outcome r = invoke({"table", "3", "--depth", "1", "--nsim", "100", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "table3.csv"));
    CHECK(std::filesystem::exists(dir / "table3.md"));
    std::filesystem::remove_all(dir);
}

}
