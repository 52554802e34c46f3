#include "faa/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "faa/composition.hpp"
#include "faa/json_io.hpp"
#include "faa/partitions.hpp"
#include "faa/symbolic.hpp"

namespace faa::cli {

using nlohmann::json;

namespace {

constexpr unsigned max_order = 64;

/// Usage or input problem; maps to exit status 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = 1;
    std::optional<unsigned> decimal;
};

struct DeriveOptions {
    unsigned n = 0;
    std::string method = "partition";
    std::optional<std::string> phi;
    std::optional<std::string> psi;
    std::optional<std::string> at;
    std::optional<std::string> phi_derivs;
    std::optional<std::string> psi_derivs;
};

struct ExpandOptions {
    unsigned n = 0;
};

struct CheckOptions {
    unsigned max_n = 10;
    unsigned trials = 100;
};

struct BellOptions {
    unsigned n = 0;
    std::optional<unsigned> k;
    std::optional<std::string> psi_derivs;
};

Expr parse_expr_option(const std::string& text, const char* flag)
{
    try {
        return parse(text);
    } catch (const parse_error& e) {
        throw usage_error(std::string(flag) + ": " + e.what());
    }
}

DerivativeSequence parse_sequence_option(const std::string& text, const char* flag)
{
    try {
        return derivative_sequence_from_json(parse_json(text));
    } catch (const json_format_error& e) {
        throw usage_error(std::string(flag) + ": " + e.what());
    }
}

void print_value(std::ostream& out, const Rational& value, const GlobalOptions& global)
{
    out << value.to_string();
    if (global.decimal) {
        out << " (" << value.to_decimal(*global.decimal) << ")";
    }
}

void add_decimal(json& j, const Rational& value, const GlobalOptions& global)
{
    if (global.decimal) {
        j["decimal"] = value.to_decimal(*global.decimal);
    }
}

// Builds the common route input. Expression mode realizes phi and psi
// directly; sequence mode realizes them as Taylor polynomials about 0 and
// about psi's value.
CheckCase derive_input(const DeriveOptions& opts)
{
    const bool expr_mode = opts.phi || opts.psi || opts.at;
    const bool seq_mode = opts.phi_derivs || opts.psi_derivs;
    if (expr_mode == seq_mode) {
        throw usage_error("give either --phi/--psi/--at or --phi-derivs/--psi-derivs");
    }
    if (expr_mode) {
        if (!opts.phi || !opts.psi || !opts.at) {
            throw usage_error("expression input needs all of --phi, --psi and --at");
        }
        Rational at;
        try {
            at = Rational::parse(*opts.at);
        } catch (const rational_parse_error& e) {
            throw usage_error(std::string("--at: ") + e.what());
        }
        Expr phi = parse_expr_option(*opts.phi, "--phi");
        Expr psi = parse_expr_option(*opts.psi, "--psi");
        DerivativeSequence psi_seq = derivative_sequence_of(psi, at, opts.n);
        DerivativeSequence phi_seq = derivative_sequence_of(phi, *psi_seq.base, opts.n);
        return CheckCase{opts.n, at, std::move(phi_seq), std::move(psi_seq), std::move(phi), std::move(psi)};
    }
    if (!opts.phi_derivs || !opts.psi_derivs) {
        throw usage_error("sequence input needs both --phi-derivs and --psi-derivs");
    }
    DerivativeSequence phi = parse_sequence_option(*opts.phi_derivs, "--phi-derivs");
    DerivativeSequence psi = parse_sequence_option(*opts.psi_derivs, "--psi-derivs");
    require_order(phi, opts.n, "phi");
    require_order(psi, opts.n, "psi");
    const Rational at(0);
    const Rational center = psi.base.value_or(Rational(0));
    Expr psi_expr = taylor_polynomial(psi, at, 'y');
    Expr phi_expr = taylor_polynomial(phi, center, 'x');
    return CheckCase{opts.n, at, std::move(phi), std::move(psi), std::move(phi_expr), std::move(psi_expr)};
}

int cmd_derive(const DeriveOptions& opts, const GlobalOptions& global, const std::vector<Route>& routes,
               std::ostream& out, std::ostream& err)
{
    const CheckCase input = derive_input(opts);

    if (opts.method != "all") {
        const auto it = std::find_if(routes.begin(), routes.end(), [&](const Route& r) { return r.name == opts.method; });
        if (it == routes.end()) {
            throw usage_error("unknown method '" + opts.method + "'");
        }
        if (opts.n < it->min_order) {
            throw usage_error("method " + it->name + " needs order >= " + std::to_string(it->min_order));
        }
        const Rational value = it->evaluate(input);
        if (global.json) {
            json j{{"n", opts.n}, {"method", opts.method}, {"value", value.to_string()}};
            add_decimal(j, value, global);
            out << j.dump() << "\n";
        } else {
            print_value(out, value, global);
            out << "\n";
        }
        return exit_ok;
    }

    const auto values = evaluate_routes(input, routes);
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const RouteValue& v) { return v.value == values.front().value; });
    if (global.json) {
        json per_route = json::object();
        for (const auto& v : values) {
            per_route[v.route] = v.value.to_string();
        }
        json j{{"n", opts.n},
               {"method", "all"},
               {"value", values.front().value.to_string()},
               {"values", std::move(per_route)},
               {"agree", agree}};
        add_decimal(j, values.front().value, global);
        out << j.dump() << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& v : values) {
            width = std::max(width, v.route.size());
        }
        for (const auto& v : values) {
            out << std::left << std::setw(static_cast<int>(width) + 2) << v.route;
            print_value(out, v.value, global);
            out << "\n";
        }
    }
    if (!agree) {
        err << "error: routes disagree at order " << opts.n << "\n";
        return exit_disagreement;
    }
    return exit_ok;
}

std::string psi_monomial_text(const MultiplicityVector& mvec)
{
    std::string out;
    for (unsigned j = 1; j <= mvec.order(); ++j) {
        const unsigned mj = mvec[j];
        if (mj == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "psi_" + std::to_string(j);
        if (mj > 1) {
            out += "^" + std::to_string(mj);
        }
    }
    return out;
}

std::string mvec_text(const MultiplicityVector& mvec)
{
    std::string out = "(";
    for (unsigned j = 1; j <= mvec.order(); ++j) {
        if (j > 1) {
            out += ",";
        }
        out += std::to_string(mvec[j]);
    }
    return out + ")";
}

int cmd_expand(const ExpandOptions& opts, const GlobalOptions& global, std::ostream& out)
{
    const auto partitions = enumerate_multiplicity_vectors(opts.n);
    if (global.json) {
        json rows = json::array();
        for (const auto& mvec : partitions) {
            rows.push_back(json{{"mvec", to_json(mvec)},
                                {"coeff", faa_coefficient(mvec).to_string()},
                                {"p", total_order(mvec)},
                                {"psi", psi_monomial_text(mvec)}});
        }
        out << rows.dump() << "\n";
        return exit_ok;
    }
    out << "# D^" << opts.n << "(phi o psi): " << partitions.size() << " terms\n";
    out << "# m  coeff  p  psi\n";
    for (const auto& mvec : partitions) {
        out << mvec_text(mvec) << "  " << faa_coefficient(mvec) << "  " << total_order(mvec) << "  "
            << psi_monomial_text(mvec) << "\n";
    }
    return exit_ok;
}

json case_json(const CheckCase& c)
{
    return json{{"n", c.n},
                {"at", c.at.to_string()},
                {"phi", to_json(c.phi)},
                {"psi", to_json(c.psi)},
                {"phi_expr", to_string(c.phi_expr)},
                {"psi_expr", to_string(c.psi_expr)}};
}

int cmd_check(const CheckOptions& opts, const GlobalOptions& global, const std::vector<Route>& routes,
              std::ostream& out, std::ostream& err)
{
    const CheckResult result = run_check(opts.max_n, opts.trials, global.seed, routes);

    if (global.json) {
        json orders = json::array();
        for (const auto& o : result.orders) {
            orders.push_back(json{{"n", o.n}, {"trials", o.trials}, {"routes", o.routes}});
        }
        json j{{"max_n", opts.max_n},
               {"trials", opts.trials},
               {"seed", global.seed},
               {"orders", std::move(orders)},
               {"ok", result.ok()}};
        if (result.disagreement) {
            json values = json::object();
            for (const auto& v : result.disagreement->values) {
                values[v.route] = v.value.to_string();
            }
            j["witness"] = json{{"input", case_json(result.disagreement->input)}, {"values", std::move(values)}};
        }
        out << j.dump() << "\n";
    } else {
        out << "order  trials  routes  status\n";
        for (const auto& o : result.orders) {
            const bool failed = result.disagreement && result.disagreement->input.n == o.n;
            out << std::left << std::setw(7) << o.n << std::setw(8) << o.trials << std::setw(8) << o.routes
                << (failed ? "DISAGREE" : "ok") << "\n";
        }
        if (result.disagreement) {
            const auto& w = *result.disagreement;
            out << "witness:\n";
            out << "  n         " << w.input.n << "\n";
            out << "  at        " << w.input.at << "\n";
            out << "  phi       " << to_json(w.input.phi).dump() << "\n";
            out << "  psi       " << to_json(w.input.psi).dump() << "\n";
            out << "  phi(x)    " << to_string(w.input.phi_expr) << "\n";
            out << "  psi(y)    " << to_string(w.input.psi_expr) << "\n";
            for (const auto& v : w.values) {
                out << "  " << std::left << std::setw(10) << v.route << v.value << "\n";
            }
        } else {
            out << "all routes agree (max-n " << opts.max_n << ", trials " << opts.trials << ", seed " << global.seed
                << ")\n";
        }
    }
    if (!result.ok()) {
        err << "error: routes disagree at order " << result.disagreement->input.n << "\n";
        return exit_disagreement;
    }
    return exit_ok;
}

int cmd_bell(const BellOptions& opts, const GlobalOptions& global, std::ostream& out)
{
    if (opts.k && (*opts.k == 0 || *opts.k > opts.n)) {
        throw usage_error("-k must satisfy 1 <= k <= n");
    }
    DerivativeSequence psi;
    if (opts.psi_derivs) {
        psi = parse_sequence_option(*opts.psi_derivs, "--psi-derivs");
    } else {
        psi.derivs.assign(opts.n, Rational(1));
    }
    const Rational value = opts.k ? partial_bell(opts.n, *opts.k, psi) : complete_bell(opts.n, psi);
    if (global.json) {
        json j{{"n", opts.n}, {"k", opts.k ? json(*opts.k) : json(nullptr)}, {"value", value.to_string()}};
        add_decimal(j, value, global);
        out << j.dump() << "\n";
    } else {
        print_value(out, value, global);
        out << "\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return run(args, out, err, default_routes());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::vector<Route>& routes)
{
    CLI::App app{"Exact higher-order derivatives of a composition phi(psi(y))", "faa"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_flag("--json", global.json, "Emit JSON instead of text");
    app.add_option("--seed", global.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--decimal", global.decimal, "Also print values as decimals with this many digits")
        ->check(CLI::Range(0U, 1000U));

    DeriveOptions derive;
    auto* derive_cmd = app.add_subcommand("derive", "Compute D^n(phi o psi)");
    derive_cmd->fallthrough();
    derive_cmd->add_option("-n", derive.n, "Derivative order")->required()->check(CLI::Range(1U, max_order));
    derive_cmd->add_option("--method", derive.method, "partition | determinant | bell | series | symbolic | all")
        ->check(CLI::IsMember({"partition", "determinant", "bell", "series", "symbolic", "all"}))
        ->capture_default_str();
    derive_cmd->add_option("--phi", derive.phi, "Outer polynomial in x");
    derive_cmd->add_option("--psi", derive.psi, "Inner polynomial in y");
    derive_cmd->add_option("--at", derive.at, "Expansion point y0 (rational)");
    derive_cmd->add_option("--phi-derivs", derive.phi_derivs, "Outer derivatives at psi(y0), JSON");
    derive_cmd->add_option("--psi-derivs", derive.psi_derivs, "Inner derivatives at y0, JSON");

    ExpandOptions expand;
    auto* expand_cmd = app.add_subcommand("expand", "List the partition terms of D^n(phi o psi)");
    expand_cmd->fallthrough();
    expand_cmd->add_option("-n", expand.n, "Derivative order")->required()->check(CLI::Range(1U, max_order));

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Cross-check every route on random inputs");
    check_cmd->fallthrough();
    check_cmd->add_option("--max-n", check.max_n, "Highest order checked")
        ->check(CLI::Range(1U, 20U))
        ->capture_default_str();
    check_cmd->add_option("--trials", check.trials, "Random inputs per order")->capture_default_str();

    BellOptions bell;
    auto* bell_cmd = app.add_subcommand("bell", "Partial or complete Bell polynomial values");
    bell_cmd->fallthrough();
    bell_cmd->add_option("-n", bell.n, "Order")->required()->check(CLI::Range(1U, max_order));
    bell_cmd->add_option("-k", bell.k, "Number of blocks (omit for the complete polynomial)");
    bell_cmd->add_option("--psi-derivs", bell.psi_derivs, "Inner derivatives, JSON (default all ones)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*derive_cmd) {
            return cmd_derive(derive, global, routes, out, err);
        }
        if (*expand_cmd) {
            return cmd_expand(expand, global, out);
        }
        if (*check_cmd) {
            return cmd_check(check, global, routes, out, err);
        }
        return cmd_bell(bell, global, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const sequence_too_short& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace faa::cli
