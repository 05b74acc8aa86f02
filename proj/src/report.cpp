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

#include "ciwidth/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ciwidth/error.hpp"
#include "ciwidth/simulate.hpp"
#include "ciwidth/sizer.hpp"

namespace ciwidth::report {

namespace {

constexpr std::array<const char*, 11> kColumns = {
    "family",     "param",        "width0", "conf_level", "power_target", "n_expected",
    "cov_expected", "pow_expected", "n_exact", "cov_exact",  "pow_exact"};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::array<std::string, kColumns.size()> cells(const TableRow& r) {
    return {r.family,
            format("%.6g", r.param),
            format("%.6g", r.width0),
            format("%.2f", r.conf_level),
            format("%.2f", r.power_target),
            std::to_string(r.n_expected),
            format("%.4f", r.cov_expected),
            format("%.4f", r.pow_expected),
            std::to_string(r.n_exact),
            format("%.4f", r.cov_exact),
            format("%.4f", r.pow_exact)};
}

void fill_simulation(TableRow& row, const DesignSpec& spec, std::uint64_t nsim, std::uint64_t master,
                     std::uint64_t index) {
    const SimReport expected = simulate({nsim, cell_seed(master, index, 0), spec, row.n_expected});
    const SimReport exact = simulate({nsim, cell_seed(master, index, 1), spec, row.n_exact});
    row.cov_expected = expected.coverage;
    row.pow_expected = expected.power;
    row.cov_exact = exact.coverage;
    row.pow_exact = exact.power;
}

TableRow base_row(const char* family, double param, double width, double alpha, double psi) {
    TableRow row;
    row.family = family;
    row.param = param;
    row.width0 = width;
    row.conf_level = 1 - alpha;
    row.power_target = psi;
    return row;
}

void require_depth(int depth) { detail::require(depth >= 1, "table depth must be >= 1"); }

}  // namespace

std::uint64_t cell_seed(std::uint64_t master, std::uint64_t row, int which) {
    return splitmix64(master ^ splitmix64(2 * row + static_cast<std::uint64_t>(which)));
}

TableRow normal_row(double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                    std::uint64_t row) {
    TableRow r = base_row("normal", 1.0, width, alpha, psi);
    r.n_expected = n_expected_normal(1.0, width, alpha);
    r.n_exact = n_exact_normal(1.0, width, alpha, psi);
    fill_simulation(r, {NormalFamily{1.0}, alpha, psi, width}, nsim, master, row);
    return r;
}

TableRow poisson_row(double rate, double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                     std::uint64_t row) {
    TableRow r = base_row("poisson", rate, width, alpha, psi);
    const SearchPolicy policy = default_poisson_policy(rate, width);
    r.n_expected = n_expected_poisson(rate, width, alpha, policy);
    r.n_exact = n_exact_poisson(rate, width, alpha, psi, policy);
    fill_simulation(r, {PoissonFamily{rate}, alpha, psi, width}, nsim, master, row);
    return r;
}

TableRow binomial_row(double p0, double width, double alpha, double psi, std::uint64_t nsim, std::uint64_t master,
                      std::uint64_t row) {
    TableRow r = base_row("binomial", p0, width, alpha, psi);
    r.n_expected = n_expected_binomial(p0, width, alpha, reference_binomial_expected_policy(p0, width, alpha));
    r.n_exact = n_exact_binomial(p0, width, alpha, psi, reference_binomial_exact_policy());
    fill_simulation(r, {BinomialFamily{p0}, alpha, psi, width}, nsim, master, row);
    return r;
}

std::vector<TableRow> table_normal(int depth, std::uint64_t nsim, std::uint64_t seed) {
    require_depth(depth);
    std::vector<TableRow> rows;
    for (int r = 1; r <= depth; ++r) {
        const double width = std::ldexp(1.0, -r);
        for (double alpha : {0.05, 0.1}) {
            for (double psi : {0.8, 0.9}) rows.push_back(normal_row(width, alpha, psi, nsim, seed, rows.size()));
        }
    }
    return rows;
}

std::vector<TableRow> table_poisson(int depth, std::uint64_t nsim, std::uint64_t seed) {
    require_depth(depth);
    std::vector<TableRow> rows;
    for (int r = 1; r <= depth; ++r) {
        const double rate = 0.005 * std::ldexp(1.0, r);
        for (double width : {0.2 * rate, 0.1 * rate}) {
            for (double alpha : {0.05, 0.1}) {
                for (double psi : {0.8, 0.9}) {
                    rows.push_back(poisson_row(rate, width, alpha, psi, nsim, seed, rows.size()));
                }
            }
        }
    }
    return rows;
}

std::vector<TableRow> table_binomial(int depth, std::uint64_t nsim, std::uint64_t seed) {
    require_depth(depth);
    std::vector<TableRow> rows;
    for (int r = 1; r <= depth; ++r) {
        const double p0 = std::ldexp(1.0, -r);
        for (double width : {0.1, 0.05}) {
            for (double alpha : {0.05, 0.1}) {
                for (double psi : {0.8, 0.9}) {
                    rows.push_back(binomial_row(p0, width, alpha, psi, nsim, seed, rows.size()));
                }
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << "\r\n";
    for (const TableRow& row : rows) {
        const auto c = cells(row);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i]);
        out << "\r\n";
    }
    return out.str();
}

std::string to_markdown(const std::vector<TableRow>& rows) {
    std::vector<std::array<std::string, kColumns.size()>> body;
    body.reserve(rows.size());
    std::array<std::size_t, kColumns.size()> width{};
    for (std::size_t i = 0; i < kColumns.size(); ++i) width[i] = std::string(kColumns[i]).size();
    for (const TableRow& row : rows) {
        body.push_back(cells(row));
        for (std::size_t i = 0; i < kColumns.size(); ++i) width[i] = std::max(width[i], body.back()[i].size());
    }

    std::ostringstream out;
    auto line = [&](auto&& text_of) {
        out << '|';
        for (std::size_t i = 0; i < kColumns.size(); ++i) {
            const std::string text = text_of(i);
            // family left-aligned, numbers right-aligned
            if (i == 0) {
                out << ' ' << text << std::string(width[i] - text.size(), ' ') << " |";
            } else {
                out << ' ' << std::string(width[i] - text.size(), ' ') << text << " |";
            }
        }
        out << '\n';
    };
    line([](std::size_t i) { return std::string(kColumns[i]); });
    line([&](std::size_t i) {
        return i == 0 ? ":" + std::string(width[i] - 1, '-') : std::string(width[i] - 1, '-') + ":";
    });
    for (const auto& c : body) line([&](std::size_t i) { return c[i]; });
    return out.str();
}

void write_table(const std::vector<TableRow>& rows, int number, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::string stem = "table" + std::to_string(number);
    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
        f << text;
        if (!f) throw std::runtime_error("failed writing " + path.string());
    };
    write(dir / (stem + ".csv"), to_csv(rows));
    write(dir / (stem + ".md"), to_markdown(rows));
}

}  // namespace ciwidth::report
