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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ciwidth/error.hpp"
#include "ciwidth/report.hpp"
#include "doctest.h"

using namespace ciwidth;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("normal table shape and first row") {
    const auto rows = report::table_normal(2, 200, 5);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].family == "normal");
    CHECK(rows[0].param == 1.0);
    CHECK(rows[0].width0 == 0.5);
    CHECK(rows[0].conf_level == doctest::Approx(0.95));
    CHECK(rows[0].power_target == 0.8);
    CHECK(rows[0].n_expected == 62);
    CHECK(rows[0].n_exact == 73);
    CHECK(rows[4].width0 == 0.25);
    CHECK(rows[7].n_exact == 198);
}

TEST_CASE("poisson and binomial table shapes") {
    const auto poi = report::table_poisson(1, 50, 0);
    REQUIRE(poi.size() == 8);
    CHECK(poi[0].param == doctest::Approx(0.01));
    CHECK(poi[0].width0 == doctest::Approx(0.002));
    CHECK(poi[0].n_expected == 39439);
    CHECK(poi[0].n_exact == 41064);
    CHECK(poi[4].width0 == doctest::Approx(0.001));

    const auto bin = report::table_binomial(2, 50, 0);
    REQUIRE(bin.size() == 16);
    // p0 = 1/2: n columns do not depend on the power target
    CHECK(bin[0].n_exact == 381);
    CHECK(bin[1].n_exact == 381);
    CHECK(bin[4].n_exact == 1533);
    CHECK(bin[8].param == 0.25);
    CHECK(bin[8].n_expected == 286);
    CHECK(bin[8].n_exact == 302);
}

TEST_CASE("a single replication gives zero or one in every cell") {
    for (const auto& row : report::table_normal(3, 1, 0)) {
        for (double v : {row.cov_expected, row.pow_expected, row.cov_exact, row.pow_exact}) {
            CHECK((v == 0.0 || v == 1.0));
        }
    }
}

TEST_CASE("sizing columns do not depend on the seed") {
    const auto a = report::table_binomial(1, 20, 1);
    const auto b = report::table_binomial(1, 20, 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n_expected == b[i].n_expected);
        CHECK(a[i].n_exact == b[i].n_exact);
    }
}

TEST_CASE("csv and markdown formatting") {
    report::TableRow row;
    row.family = "normal";
    row.param = 1;
    row.width0 = 0.0625;
    row.conf_level = 0.9;
    row.power_target = 0.9;
    row.n_expected = 2771;
    row.cov_expected = 0.90049;
    row.pow_expected = 0.5;
    row.n_exact = 2867;
    row.cov_exact = 0.9;
    row.pow_exact = 0.90431;
    const std::string csv = report::to_csv({row});
    CHECK(csv ==
          "family,param,width0,conf_level,power_target,n_expected,cov_expected,pow_expected,n_exact,cov_exact,"
          "pow_exact\r\n"
          "normal,1,0.0625,0.90,0.90,2771,0.9005,0.5000,2867,0.9000,0.9043\r\n");

    row.family = "odd, \"name\"";
    CHECK(report::to_csv({row}).find("\"odd, \"\"name\"\"\",1,") != std::string::npos);

    const std::string md = report::to_markdown({row, row});
    std::istringstream lines(md);
    std::string line;
    std::size_t count = 0, length = 0;
    while (std::getline(lines, line)) {
        if (count++ == 0) length = line.size();
        CHECK(line.size() == length);
        CHECK(line.front() == '|');
    }
    CHECK(count == 4);
}

TEST_CASE("files are byte-identical across reruns") {
    const auto dir = std::filesystem::temp_directory_path() / "ciwidth_report_test";
    std::filesystem::remove_all(dir);
    report::write_table(report::table_normal(2, 300, 11), 1, dir / "a");
    report::write_table(report::table_normal(2, 300, 11), 1, dir / "b");
    for (const char* name : {"table1.csv", "table1.md"}) {
        const std::string a = slurp(dir / "a" / name);
        CHECK_FALSE(a.empty());
        CHECK(a == slurp(dir / "b" / name));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("depth must be positive") {
    CHECK_THROWS_AS(report::table_normal(0, 10), DomainError);
    CHECK_THROWS_AS(report::table_poisson(-1, 10), DomainError);
}

}
