// Command-line front end: counts, verification sweeps, correlation
// experiments and zeta checks. JSON on stdout, CSV for sweeps.

#include "holey/asymptotics.hpp"
#include "holey/matrices.hpp"
#include "holey/oracle.hpp"
#include "holey/regions.hpp"
#include "holey/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace holey;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

struct SpecArgs {
    int n = 0;
    int m = 0;
    std::string left, right;

    void attach(CLI::App* app) {
        app->add_option("--n", n, "half side length (even)")->required();
        app->add_option("--m", m, "half height")->required();
        app->add_option("--left", left, "left-pointing hole positions, comma separated")->allow_extra_args(false);
        app->add_option("--right", right, "right-pointing hole positions, comma separated")->allow_extra_args(false);
    }

    RegionSpec spec() const { return make_spec(n, m, parse_list(left), parse_list(right)); }
};

json spec_json(const RegionSpec& s) {
    return {{"n", s.n}, {"m", s.m}, {"left", s.left}, {"right", s.right}, {"text", s.str()}};
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct VerifyRow {
    std::string spec;
    std::string check;
    std::string formula;
    std::string oracle;
    bool match;
};

int run_verify(int max_n, int max_m, int max_p, bool strict, bool as_json) {
    std::vector<VerifyRow> rows;
    bool all = true;
    auto add = [&](const RegionSpec& s, const std::string& check, const Integer& f, const Integer& o) {
        bool match = f == o;
        all = all && match;
        rows.push_back({s.str(), check, to_string(f), to_string(o), match});
        return match;
    };
    for (const RegionSpec& s : enumerate_specs(max_n, max_m, max_p)) {
        Integer full = count_region(s, CountKind::full).value;
        if (!add(s, "full", full, count_tilings(build_region(s, Part::full))) && strict) break;
        Integer lower = count_region(s, CountKind::lower).value;
        PointSets lp = lgv_points(s, Part::lower);
        if (!add(s, "lower", lower, count_families(lp.starts, lp.ends, Constraint::avoid_diagonal)) && strict) break;
        Integer upper = count_region(s, CountKind::upper_weighted).value;
        PointSets up = lgv_points(s, Part::upper);
        if (!add(s, "upper_weighted", upper, count_families(up.starts, up.ends, Constraint::weighted_below)) && strict)
            break;
    }
    if (as_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"spec", r.spec}, {"check", r.check}, {"formula", r.formula}, {"oracle", r.oracle},
                           {"match", r.match}});
        print(out);
    } else {
        std::printf("%-36s %-15s %20s %20s %s\n", "spec", "check", "formula", "oracle", "match");
        for (const auto& r : rows)
            std::printf("%-36s %-15s %20s %20s %s\n", r.spec.c_str(), r.check.c_str(), r.formula.c_str(),
                        r.oracle.c_str(), r.match ? "yes" : "NO");
    }
    return all ? kOk : kFailed;
}

json report_json(const CorrelationReport& r) {
    return {{"n", r.n},
            {"m", r.m},
            {"xi", r.xi.get_str()},
            {"det_lower", to_string(r.det_lower_exact)},
            {"det_upper", to_string(r.det_upper_exact)},
            {"omega", r.omega},
            {"predicted", r.predicted},
            {"ratio", r.ratio}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts and checks for hexagons with collinear triangular holes"};
    app.require_subcommand(1);

    SpecArgs count_args;
    std::string kind = "full";
    auto* count = app.add_subcommand("count", "exact tiling count");
    count_args.attach(count);
    count->add_option("--kind", kind, "lower | upper_weighted | full | free_half");

    int max_n = 6, max_m = 2, max_p = 2;
    bool strict = false, verify_json = false;
    auto* verify = app.add_subcommand("verify", "compare determinant counts with brute-force oracles");
    verify->add_option("--max-n", max_n);
    verify->add_option("--max-m", max_m);
    verify->add_option("--max-p", max_p);
    verify->add_flag("--strict", strict, "stop at the first mismatch");
    verify->add_flag("--json", verify_json, "JSON instead of a table");

    SpecArgs corr_args;
    std::string model = "bulk";
    auto* correlate = app.add_subcommand("correlate", "finite-size correlation against the predicted interaction");
    corr_args.attach(correlate);
    correlate->add_option("--model", model, "bulk | free");

    std::string xi_text = "1", ns_text, ds_text, sweep_left, sweep_right, sweep_model = "bulk";
    int sweep_n_fixed = 0;
    auto* sweep = app.add_subcommand("sweep", "CSV sweep over n (fixed holes) or over hole distance (fixed n)");
    sweep->add_option("--xi", xi_text, "aspect ratio 2m/n as a rational, e.g. 3/2");
    sweep->add_option("--ns", ns_text, "comma separated n values");
    sweep->add_option("--left", sweep_left);
    sweep->add_option("--right", sweep_right);
    sweep->add_option("--n", sweep_n_fixed, "n for a distance sweep");
    sweep->add_option("--d", ds_text, "comma separated d values: holes at -d (left) and d (right)");
    sweep->add_option("--model", sweep_model, "bulk | free");

    SpecArgs zeta_args;
    std::string half = "lower";
    std::uint64_t budget = kDefaultBudget;
    auto* zeta_cmd = app.add_subcommand("zeta", "exhaustive check of the hole-filling injection");
    zeta_args.attach(zeta_cmd);
    zeta_cmd->add_option("--half", half, "lower | upper");
    zeta_cmd->add_option("--budget", budget, "search node budget");

    std::string which = "box";
    long fn = 0, fm = 0;
    auto* formulas = app.add_subcommand("formulas", "closed product formulas");
    formulas->add_option("--which", which, "box | tc | vs")->required();
    formulas->add_option("--n", fn)->required();
    formulas->add_option("--m", fm)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*count) {
            RegionSpec s = count_args.spec();
            CountResult r = count_region(s, parse_count_kind(kind));
            json factors = json::object();
            for (const auto& [k, v] : r.factors) factors[k] = to_string(v);
            print({{"spec", spec_json(s)}, {"kind", count_kind_name(r.kind)}, {"count", to_string(r.value)},
                   {"factors", factors}});
            return kOk;
        }
        if (*verify) return run_verify(max_n, max_m, max_p, strict, verify_json);
        if (*correlate) {
            CorrelationReport r = finite_correlation(corr_args.spec(), parse_model(model));
            json j = report_json(r);
            j["spec"] = spec_json(corr_args.spec());
            j["model"] = model_name(parse_model(model));
            print(j);
            return kOk;
        }
        if (*sweep) {
            Rational xi = parse_rational(xi_text);
            if (xi <= 0) throw std::invalid_argument("xi must be positive");
            Model md = parse_model(sweep_model);
            std::cout << csv_header() << '\n';
            if (!ns_text.empty()) {
                std::vector<int> left = parse_list(sweep_left), right = parse_list(sweep_right);
                auto family = [&](int n, int m) { return make_spec(n, m, left, right); };
                for (const auto& r : sweep_n(family, xi, parse_list(ns_text), md)) std::cout << csv_row(r) << '\n';
                return kOk;
            }
            if (ds_text.empty() || sweep_n_fixed <= 0) throw CLI::ValidationError("sweep needs --ns, or --n with --d");
            SweepSeries s = distance_sweep(sweep_n_fixed, xi, parse_list(ds_text), md);
            for (const auto& r : s.reports) std::cout << csv_row(r) << '\n';
            std::cerr << "log-log slope " << s.slope << '\n';
            return kOk;
        }
        if (*zeta_cmd) {
            RegionSpec s = zeta_args.spec();
            Part p = parse_part(half);
            InjectionReport r = verify_injection(s, p, budget);
            json j = {{"spec", spec_json(s)},
                      {"half", part_name(p)},
                      {"tilings", std::to_string(r.tilings)},
                      {"distinct_images", std::to_string(r.distinct_images)},
                      {"valid_images", r.valid_images},
                      {"path_failures", std::to_string(r.path_failures)},
                      {"weight_violations", std::to_string(r.weight_violations)},
                      {"locality_ok", r.locality_ok},
                      {"disjoint_ok", r.disjoint_ok},
                      {"ok", r.ok}};
            if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
            print(j);
            return r.ok && r.weight_ok() ? kOk : kFailed;
        }
        if (*formulas) {
            Integer v = product_formula(parse_product(which), fn, fm);
            print({{"which", product_name(parse_product(which))}, {"n", fn}, {"m", fm}, {"value", to_string(v)}});
            return kOk;
        }
    } catch (const SpecError& e) {
        for (const auto& p : e.problems) std::cerr << "invalid spec: " << p << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded after " << e.nodes << " nodes\n";
        return kFailed;
    } catch (const FormulaMismatch& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
