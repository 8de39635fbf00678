/**
 * @file nilcalc_main.cpp
 * @brief Command-line front end for the exact nilpotent functional calculus.
 *
 * Subcommands:
 *   verify     run the built-in worked-example suite against embedded results
 *   analyze    depth / exceptional-point report for a matrix and a function
 *   scan       randomized sharpness scan of the depth bound (JSON lines)
 *   evolve     exact time-evolution polynomial of an exceptional point
 *   resolvent  (modified) resolvent Laurent data of an exceptional point
 *
 * Exit codes: 0 success, 1 verification mismatch, 2 input error.
 */
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcalc/depth.hpp"
#include "nilcalc/exceptional.hpp"
#include "nilcalc/function_spec.hpp"
#include "nilcalc/json_io.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/nilpotent.hpp"
#include "nilcalc/scan.hpp"
#include "nilcalc/series.hpp"
#include "nilcalc/verify_suite.hpp"

namespace {

using nilcalc::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

/// Values from --config <file> fill in options the user did not pass on the
/// command line, so full runs can be captured as a single JSON object.
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return json::parse(in);
}

template <typename T>
void fill_from_config(const json& config, const CLI::Option* opt, const char* key, T& value) {
    if (opt->count() == 0 && config.contains(key)) value = config.at(key).get<T>();
}

nilcalc::ExactMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return json::parse(in).get<nilcalc::ExactMatrix>();
}

nilcalc::FunctionSpec parse_function_spec(const std::string& text) {
    // inline JSON, or @file to read it from disk
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("cannot open function spec file: " + text.substr(1));
        return nilcalc::FunctionSpec::from_json(json::parse(in));
    }
    return nilcalc::FunctionSpec::from_json(json::parse(text));
}

std::string order_text(std::size_t r) {
    return r == nilcalc::kInfiniteOrder ? "inf" : std::to_string(r);
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

int run_verify(bool as_json) {
    const nilcalc::VerifyReport rep = nilcalc::run_verify_suite();
    if (as_json) {
        json out;
        out["ok"] = rep.ok;
        out["mismatches"] = rep.mismatches;
        out["rows"] = json::array();
        for (const auto& row : rep.computed)
            out["rows"].push_back({{"case", row.case_id},
                                   {"function", row.function_desc},
                                   {"contact_order", nilcalc::order_to_json(row.contact_order)},
                                   {"bound", row.bound},
                                   {"effective_index", row.effective},
                                   {"mechanism", row.mechanism}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> table{
            {"case", "function", "r", "bound", "effective", "mechanism"}};
        for (const auto& row : rep.computed)
            table.push_back({row.case_id, row.function_desc, order_text(row.contact_order),
                             std::to_string(row.bound), std::to_string(row.effective),
                             row.mechanism});
        print_aligned(table);
        if (rep.ok) {
            std::cout << "all " << rep.computed.size() << " cases match the embedded table\n";
        } else {
            std::cout << "\n";
            for (const auto& m : rep.mismatches) std::cout << "MISMATCH: " << m << "\n";
        }
    }
    return rep.ok ? kExitOk : kExitMismatch;
}

int run_analyze(const std::string& matrix_path, const std::string& spec_text, bool as_json) {
    const nilcalc::ExactMatrix m = load_matrix(matrix_path);
    const nilcalc::FunctionSpec spec = parse_function_spec(spec_text);

    // A nilpotent input is analyzed directly; anything else must decompose
    // as lambda I + N.
    bool plain_nilpotent = true;
    try {
        nilcalc::nilpotency_index(m);
    } catch (const nilcalc::NotNilpotent&) {
        plain_nilpotent = false;
    }

    if (plain_nilpotent) {
        const std::size_t index = nilcalc::nilpotency_index(m).index;
        const nilcalc::TruncSeries f = spec.local_series(index, nilcalc::GaussianRational(0));
        const nilcalc::DepthReport rep = nilcalc::analyze_depth(f, m);
        json extras{{"input", "nilpotent"}, {"function", spec.describe()}};
        if (spec.kind == nilcalc::FunctionSpec::Kind::hypergeom)
            extras["termination"] = nilcalc::classify_termination(spec.upper, spec.lower, m);
        if (as_json) {
            json out = rep;
            out.update(extras);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "input: nilpotent matrix, n = " << m.dim() << ", nilpotency index "
                      << rep.m_plus_1 << "\n"
                      << "function: " << spec.describe() << "\n";
            print_aligned({{"contact order", order_text(rep.contact_order)},
                           {"depth bound", std::to_string(rep.bound)},
                           {"effective index", std::to_string(rep.effective_index)},
                           {"sharp", rep.sharp ? "yes" : "no"}});
            if (extras.contains("termination"))
                std::cout << "termination: " << extras["termination"]["mechanism"].get<std::string>()
                          << "\n";
        }
        return kExitOk;
    }

    const nilcalc::ExceptionalPoint ep = nilcalc::ep_decompose(m);
    const nilcalc::TruncSeries g = spec.local_series(ep.order, ep.lambda);
    const nilcalc::EPReport rep = nilcalc::apply_function_at_ep(ep, g);
    if (as_json) {
        json out = rep;
        out["function"] = spec.describe();
        if (spec.kind == nilcalc::FunctionSpec::Kind::hypergeom)
            out["termination"] =
                nilcalc::classify_termination(spec.upper, spec.lower, ep.nilpotent_part);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "input: exceptional point, lambda = " << ep.lambda.str() << ", order "
                  << ep.order << ", dimension " << ep.dimension << "\n"
                  << "function: " << spec.describe() << "\n";
        print_aligned({{"contact order", order_text(rep.contact_order)},
                       {"depth before", std::to_string(rep.depth_before)},
                       {"depth bound after", std::to_string(rep.depth_bound_after)},
                       {"effective depth after", std::to_string(rep.depth_effective_after)},
                       {"annihilated", rep.annihilated ? "yes" : "no"},
                       {"traced pole order", std::to_string(rep.traced_pole_order)},
                       {"matrix pole order", std::to_string(rep.matrix_pole_order)},
                       {"pole order bound", std::to_string(rep.pole_order_bound)}});
    }
    return kExitOk;
}

int run_scan(std::size_t n_min, std::size_t n_max, std::size_t r_min, std::size_t r_max,
             std::size_t trials, std::uint64_t seed) {
    const auto records = nilcalc::sharpness_scan(n_min, n_max, r_min, r_max, trials, seed);
    for (const auto& rec : records) std::cout << json(rec).dump() << "\n";
    for (const auto& row : nilcalc::summarize_scan(records)) std::cout << json(row).dump() << "\n";
    return kExitOk;
}

int run_evolve(const std::string& matrix_path, const std::optional<std::string>& t_text,
               bool as_json) {
    const nilcalc::ExceptionalPoint ep = nilcalc::ep_decompose(load_matrix(matrix_path));
    const nilcalc::EvolutionPolynomial evo = nilcalc::time_evolution(ep);
    std::optional<nilcalc::EvolutionSample> sample;
    if (t_text) sample = nilcalc::evolution_at(ep, nilcalc::Rational::parse(*t_text));

    if (as_json) {
        json out = evo;
        out["order"] = ep.order;
        if (sample)
            out["at_t"] = {{"t", nilcalc::Rational::parse(*t_text)},
                           {"prefactor_exponent", sample->prefactor_exponent},
                           {"polynomial_part", sample->polynomial_part}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "exceptional point: lambda = " << ep.lambda.str() << ", order " << ep.order
              << ", dimension " << ep.dimension << "\n"
              << "U(t) = exp(" << ep.lambda.str() << " t) * sum_j t^j M_j with M_j = N^j / j!\n";
    for (std::size_t j = 0; j < evo.matrix_coeffs.size(); ++j)
        std::cout << "M_" << j << " =\n" << evo.matrix_coeffs[j].str() << "\n";
    if (sample)
        std::cout << "at t = " << *t_text << ": exponent lambda t = "
                  << sample->prefactor_exponent.str() << ", polynomial part\n"
                  << sample->polynomial_part.str() << "\n";
    return kExitOk;
}

int run_resolvent(const std::string& matrix_path, const std::string& spec_text, bool as_json) {
    const nilcalc::ExceptionalPoint ep = nilcalc::ep_decompose(load_matrix(matrix_path));

    if (spec_text.empty()) {
        const nilcalc::LaurentExpansion lau = nilcalc::resolvent_expansion(ep);
        if (as_json) {
            std::cout << json(lau).dump(2) << "\n";
            return kExitOk;
        }
        std::cout << "resolvent of the exceptional point at lambda = " << ep.lambda.str()
                  << ": pole order " << lau.pole_order << "\n";
        for (std::size_t j = 0; j < lau.coeffs.size(); ++j)
            std::cout << "coefficient of (z - lambda)^-" << (j + 1) << ":\n"
                      << lau.coeffs[j].str() << "\n";
        return kExitOk;
    }

    const nilcalc::FunctionSpec spec = parse_function_spec(spec_text);
    const nilcalc::TruncSeries g = spec.local_series(ep.order, ep.lambda);
    const nilcalc::ModifiedResolvent mr = nilcalc::modified_resolvent(ep, g);
    if (as_json) {
        json out = mr;
        out["function"] = spec.describe();
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "modified resolvent for " << spec.describe() << " at lambda = "
              << ep.lambda.str() << "\n"
              << "traced pole order: " << mr.traced_pole_order << "\n"
              << "matrix-valued pole order: " << mr.matrix_pole_order << "\n"
              << "traced coefficients:";
    for (const auto& c : mr.traced.coeffs) std::cout << " " << c.str();
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact functional calculus for nilpotent matrices and exceptional points"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string config_path;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_option("--config", config_path, "JSON file supplying defaults for all options");

    // global flags may come after the subcommand name
    auto* verify = app.add_subcommand("verify", "run the built-in worked-example suite");
    verify->fallthrough();

    auto* analyze = app.add_subcommand("analyze", "analyze a matrix under a function");
    analyze->fallthrough();
    std::string matrix_path, spec_text;
    analyze->add_option("matrix", matrix_path, "matrix JSON file")->required();
    auto* analyze_fn =
        analyze->add_option("-f,--function", spec_text, "function spec (inline JSON or @file)");

    auto* scan = app.add_subcommand("scan", "randomized sharpness scan (JSON lines)");
    scan->fallthrough();
    std::size_t n_min = 2, n_max = 5, r_min = 1, r_max = 3, trials = 20;
    std::uint64_t seed = 1;
    auto* o_nmin = scan->add_option("--n-min", n_min, "smallest Jordan block size");
    auto* o_nmax = scan->add_option("--n-max", n_max, "largest Jordan block size");
    auto* o_rmin = scan->add_option("--r-min", r_min, "smallest contact order (>= 1)");
    auto* o_rmax = scan->add_option("--r-max", r_max, "largest contact order");
    auto* o_trials = scan->add_option("--trials", trials, "trials per (n, r) pair");
    auto* o_seed = scan->add_option("--seed", seed, "random seed");

    auto* evolve = app.add_subcommand("evolve", "exact time evolution at an exceptional point");
    evolve->fallthrough();
    std::string evolve_matrix;
    std::string t_text;
    evolve->add_option("matrix", evolve_matrix, "matrix JSON file")->required();
    auto* o_t = evolve->add_option("-t,--t", t_text, "rational time, e.g. 1 or 3/2");

    auto* resolvent = app.add_subcommand("resolvent", "resolvent Laurent data");
    resolvent->fallthrough();
    std::string resolvent_matrix, resolvent_spec;
    resolvent->add_option("matrix", resolvent_matrix, "matrix JSON file")->required();
    auto* resolvent_fn = resolvent->add_option("-f,--function", resolvent_spec,
                                               "function spec for the modified resolvent");

    CLI11_PARSE(app, argc, argv);

    try {
        const json config = load_config(config_path);
        if (config.contains("json") && !as_json) as_json = config.at("json").get<bool>();

        if (*verify) return run_verify(as_json);
        if (*analyze) {
            fill_from_config(config, analyze_fn, "function", spec_text);
            if (spec_text.empty())
                throw std::invalid_argument("analyze requires --function (or \"function\" in --config)");
            return run_analyze(matrix_path, spec_text, as_json);
        }
        if (*scan) {
            fill_from_config(config, o_nmin, "n-min", n_min);
            fill_from_config(config, o_nmax, "n-max", n_max);
            fill_from_config(config, o_rmin, "r-min", r_min);
            fill_from_config(config, o_rmax, "r-max", r_max);
            fill_from_config(config, o_trials, "trials", trials);
            fill_from_config(config, o_seed, "seed", seed);
            if (n_min < 1 || n_max < n_min || r_min < 1 || r_max < r_min || trials < 1)
                throw std::invalid_argument("scan ranges must be nonempty and start at 1");
            return run_scan(n_min, n_max, r_min, r_max, trials, seed);
        }
        if (*evolve) {
            fill_from_config(config, o_t, "t", t_text);
            return run_evolve(evolve_matrix,
                              t_text.empty() ? std::nullopt : std::optional<std::string>(t_text),
                              as_json);
        }
        if (*resolvent) {
            fill_from_config(config, resolvent_fn, "function", resolvent_spec);
            return run_resolvent(resolvent_matrix, resolvent_spec, as_json);
        }
    } catch (const nilcalc::NotExceptionalPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
