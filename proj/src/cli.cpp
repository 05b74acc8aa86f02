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

#include "ciwidth/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <variant>

#include "CLI11.hpp"
#include "ciwidth/error.hpp"
#include "ciwidth/report.hpp"

namespace ciwidth::cli {

namespace {

struct DesignFlags {
    double alpha = 0.05;
    double power = 0.8;
    double width = 0;
};

void add_design_flags(CLI::App& cmd, DesignFlags& f) {
    cmd.add_option("--width", f.width, "Required full interval width d0")->required();
    cmd.add_option("--alpha", f.alpha, "One minus the confidence level")->capture_default_str();
    cmd.add_option("--power", f.power, "Required probability that the width is below d0")->capture_default_str();
}

DesignSpec make_spec(Family family, const DesignFlags& f) {
    DesignSpec spec{std::move(family), f.alpha, f.power, f.width};
    spec.validate();
    return spec;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

nlohmann::json family_json(const Family& family) {
    nlohmann::json j;
    j["name"] = family_name(family);
    std::visit([&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, NormalFamily>) j["sigma"] = f.sigma;
        else if constexpr (std::is_same_v<T, PoissonFamily>) j["rate"] = f.rate;
        else j["p0"] = f.p0;
    }, family);
    return j;
}

void print_sizing(std::ostream& out, const DesignSpec& spec, const SizingResult& r, bool json) {
    if (json) {
        out << to_json(spec, r).dump(2) << '\n';
        return;
    }
    out << "expected=" << r.n_expected << " exact=" << r.n_exact;
    if (r.n_approx) out << " approx=" << *r.n_approx;
    out << " width_expected=" << general(r.width_at_expected) << " width_exact=" << general(r.width_at_exact)
        << '\n';
}

}  // namespace

nlohmann::json to_json(const DesignSpec& spec, const SizingResult& result) {
    nlohmann::json j;
    j["family"] = family_json(spec.family);
    j["alpha"] = spec.alpha;
    j["power"] = spec.psi0;
    j["width"] = spec.d0;
    j["n_expected"] = result.n_expected;
    j["n_exact"] = result.n_exact;
    j["n_approx"] = result.n_approx ? nlohmann::json(*result.n_approx) : nlohmann::json(nullptr);
    j["width_at_expected"] = result.width_at_expected;
    j["width_at_exact"] = result.width_at_exact;
    return j;
}

nlohmann::json to_json(const SimConfig& cfg, const SimReport& report) {
    nlohmann::json j;
    j["family"] = family_json(cfg.spec.family);
    j["alpha"] = cfg.spec.alpha;
    j["width"] = cfg.spec.d0;
    j["n"] = cfg.n;
    j["nsim"] = report.nsim;
    j["seed"] = report.seed;
    j["covered"] = report.covered;
    j["narrow"] = report.narrow;
    j["coverage"] = report.coverage;
    j["power"] = report.power;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sample sizes for confidence intervals of a required width"};
    app.name("ciwidth");
    app.require_subcommand(1, 1);

    bool json = false;
    std::uint64_t nsim = 10000;
    std::uint64_t seed = 0;
    auto add_sim_flags = [&](CLI::App& cmd) {
        cmd.add_option("--nsim", nsim, "Monte Carlo replications")->capture_default_str();
        cmd.add_option("--seed", seed, "Random seed")->envname("CIWIDTH_SEED")->capture_default_str();
    };

    DesignFlags design;
    double sigma = 1, rate = 0, p0 = 0;

    auto* normal = app.add_subcommand("normal", "Size a Student t interval for a normal mean");
    normal->add_option("--sigma", sigma, "Population standard deviation")->required();
    add_design_flags(*normal, design);
    normal->add_flag("--json", json, "Print JSON");

    auto* poisson = app.add_subcommand("poisson", "Size a Garwood interval for a Poisson rate");
    poisson->add_option("--rate", rate, "Poisson rate per unit exposure")->required();
    add_design_flags(*poisson, design);
    poisson->add_flag("--json", json, "Print JSON");

    auto* binomial = app.add_subcommand("binomial", "Size a Wilson interval for a proportion");
    binomial->add_option("--p0", p0, "Planning value of the proportion")->required();
    add_design_flags(*binomial, design);
    binomial->add_flag("--json", json, "Print JSON");

    std::string family_flag;
    std::int64_t n = 0;
    auto* verify = app.add_subcommand("verify", "Estimate coverage and P(width < d0) by simulation");
    verify->add_option("--family", family_flag, "normal, poisson or binomial")
        ->required()
        ->check(CLI::IsMember({"normal", "poisson", "binomial"}));
    auto* sigma_opt = verify->add_option("--sigma", sigma, "Population standard deviation");
    auto* rate_opt = verify->add_option("--rate", rate, "Poisson rate per unit exposure");
    auto* p0_opt = verify->add_option("--p0", p0, "True proportion");
    verify->add_option("--n", n, "Sample size under test")->required();
    add_design_flags(*verify, design);
    add_sim_flags(*verify);
    verify->add_flag("--json", json, "Print JSON");

    int table_number = 0;
    int depth = 4;
    std::string out_dir = ".";
    auto* table = app.add_subcommand("table", "Regenerate a sizing table with simulation columns");
    table->add_option("number", table_number, "1 normal, 2 poisson, 3 binomial")
        ->required()
        ->check(CLI::Range(1, 3));
    table->add_option("--depth", depth, "Number of halvings of the table parameter")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--out", out_dir, "Output directory")->capture_default_str();
    add_sim_flags(*table);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "ciwidth: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (normal->parsed()) {
            const DesignSpec spec = make_spec(NormalFamily{sigma}, design);
            print_sizing(out, spec, size(spec), json);
        } else if (poisson->parsed()) {
            const DesignSpec spec = make_spec(PoissonFamily{rate}, design);
            print_sizing(out, spec, size(spec), json);
        } else if (binomial->parsed()) {
            const DesignSpec spec = make_spec(BinomialFamily{p0}, design);
            print_sizing(out, spec, size(spec), json);
        } else if (verify->parsed()) {
            std::optional<Family> family;
            if (family_flag == "normal") {
                detail::require(sigma_opt->count() > 0, "--sigma is required for the normal family");
                family = NormalFamily{sigma};
            } else if (family_flag == "poisson") {
                detail::require(rate_opt->count() > 0, "--rate is required for the poisson family");
                family = PoissonFamily{rate};
            } else {
                detail::require(p0_opt->count() > 0, "--p0 is required for the binomial family");
                family = BinomialFamily{p0};
            }
            const SimConfig cfg{nsim, seed, make_spec(*family, design), n};
            const SimReport rep = simulate(cfg);
            if (json) {
                out << to_json(cfg, rep).dump(2) << '\n';
            } else {
                out << "coverage=" << fixed(rep.coverage, 4) << " power=" << fixed(rep.power, 4)
                    << " covered=" << rep.covered << " narrow=" << rep.narrow << " nsim=" << rep.nsim
                    << " seed=" << rep.seed << '\n';
            }
        } else if (table->parsed()) {
            detail::require(nsim >= 1, "nsim must be >= 1");
            std::vector<report::TableRow> rows;
            if (table_number == 1) rows = report::table_normal(depth, nsim, seed);
            else if (table_number == 2) rows = report::table_poisson(depth, nsim, seed);
            else rows = report::table_binomial(depth, nsim, seed);
            const std::filesystem::path dir(out_dir);
            report::write_table(rows, table_number, dir);
            const std::string stem = "table" + std::to_string(table_number);
            out << (dir / (stem + ".csv")).string() << '\n' << (dir / (stem + ".md")).string() << '\n';
        }
    } catch (const SearchError& e) {
        err << "ciwidth: " << e.what() << '\n';
        return kNoConverge;
    } catch (const DomainError& e) {
        err << "ciwidth: " << e.what() << '\n';
        return kInvalid;
    } catch (const InfiniteResult& e) {
        err << "ciwidth: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "ciwidth: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

}  // namespace ciwidth::cli
