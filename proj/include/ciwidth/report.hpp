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
#include <filesystem>
#include <string>
#include <vector>

namespace ciwidth::report {

// One line of a sizing table. Cov/Pow columns come from Monte Carlo runs at
// n_expected and n_exact.
struct TableRow {
    std::string family;
    double param = 0;  // sigma, rate or p0
    double width0 = 0;
    double conf_level = 0;
    double power_target = 0;
    std::int64_t n_expected = 0;
    double cov_expected = 0;
    double pow_expected = 0;
    std::int64_t n_exact = 0;
    double cov_exact = 0;
    double pow_exact = 0;
};

// Seed of the Monte Carlo cell `which` (0 expected, 1 exact) of row `row`.
std::uint64_t cell_seed(std::uint64_t master, std::uint64_t row, int which);

TableRow normal_row(double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                    std::uint64_t row);
TableRow poisson_row(double rate, double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                     std::uint64_t row);
// Uses the search policies of the published table (start 5, jump 10).
TableRow binomial_row(double p0, double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                      std::uint64_t row);

// sigma = 1, widths 1/2^r for r = 1..depth, alpha in {0.05, 0.1}, psi in {0.8, 0.9}: 4 depth rows.
std::vector<TableRow> table_normal(int depth, std::uint64_t nsim, std::uint64_t seed = 0);
// rate = 0.005 2^r, widths {0.2 rate, 0.1 rate}, alpha, psi as above: 8 depth rows.
std::vector<TableRow> table_poisson(int depth, std::uint64_t nsim, std::uint64_t seed = 0);
// p0 = 1/2^r, widths {0.1, 0.05}, alpha, psi as above: 8 depth rows.
std::vector<TableRow> table_binomial(int depth, std::uint64_t nsim, std::uint64_t seed = 0);

std::string to_csv(const std::vector<TableRow>& rows);
std::string to_markdown(const std::vector<TableRow>& rows);

// Writes table<number>.csv and table<number>.md into `dir`.
void write_table(const std::vector<TableRow>& rows, int number, const std::filesystem::path& dir);

}  // namespace ciwidth::report
