#include "apolaris/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "apolaris/apolar.hpp"
#include "apolaris/homogenize.hpp"
#include "apolaris/parser.hpp"

namespace apolaris::cli {

namespace {

using nlohmann::json;

std::string format_float(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string ratio_text(const Verdict& v) {
    return v.ratio ? to_string(*v.ratio) : std::string("n/a");
}

json verdict_json(const Verdict& v) {
    json j{{"theorem", theorem_name(v.theorem)},
           {"constant", to_string(v.constant)},
           {"lhs_sq", to_string(v.lhs_sq)},
           {"rhs_sq", to_string(v.rhs_sq)},
           {"holds", v.holds},
           {"ratio", v.ratio ? json(to_string(*v.ratio)) : json(nullptr)}};
    if (v.note) j["note"] = *v.note;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

json estimate_json(const OracleEstimate& e) {
    return json{{"value", {e.value.real(), e.value.imag()}},
                {"method", e.method == OracleMethod::quadrature ? "quadrature" : "monte-carlo"},
                {"stderr", e.std_error},
                {"nodes_or_samples", e.nodes_or_samples},
                {"certified", e.certified}};
}

json search_json(const SearchReport& r) {
    Rational lhs = apolar_norm_sq(r.witness.empty() ? Poly(1) : [&] {
        Poly acc = r.witness.front();
        for (std::size_t k = 1; k < r.witness.size(); ++k) acc = acc * r.witness[k];
        return acc;
    }());
    Rational rhs = 1;
    for (const Poly& w : r.witness) rhs *= apolar_norm_sq(w);
    json j{{"theorem", "search"},
           {"constant", "1"},
           {"lhs_sq", to_string(lhs)},
           {"rhs_sq", to_string(rhs)},
           {"holds", r.min_ratio >= 1},
           {"ratio", to_string(r.min_ratio)},
           {"mode", r.exhaustive ? "exhaustive" : "sampled"},
           {"examined", r.examined}};
    json witness = json::array();
    for (const Poly& w : r.witness) witness.push_back(to_string(w));
    j["witness"] = witness;
    return j;
}

}  // namespace

std::string report_render(const Verdict& v, Format format) {
    if (format == Format::json) return verdict_json(v).dump();
    std::ostringstream os;
    os << "theorem: " << theorem_name(v.theorem) << "\n"
       << "constant: " << to_string(v.constant) << "\n"
       << "lhs_sq: " << to_string(v.lhs_sq) << "\n"
       << "rhs_sq: " << to_string(v.rhs_sq) << "\n";
    if (v.note) os << "note: " << *v.note << "\n";
    for (const std::string& w : v.witness) os << "witness: " << w << "\n";
    os << (v.holds ? "HOLDS" : "FAILS") << " (ratio " << ratio_text(v) << ")\n";
    return os.str();
}

std::string report_render(const OracleEstimate& e, Format format) {
    if (format == Format::json) return estimate_json(e).dump();
    std::ostringstream os;
    os << "value: (" << format_float(e.value.real()) << ", " << format_float(e.value.imag())
       << ")\n"
       << "method: " << (e.method == OracleMethod::quadrature ? "quadrature" : "monte-carlo")
       << "\n"
       << "stderr: " << format_float(e.std_error) << "\n"
       << "nodes_or_samples: " << e.nodes_or_samples << "\n"
       << "certified: " << (e.certified ? "yes" : "no") << "\n";
    return os.str();
}

std::string report_render(const SearchReport& r, Format format) {
    if (format == Format::json) return search_json(r).dump();
    std::ostringstream os;
    os << "mode: " << (r.exhaustive ? "exhaustive" : "sampled") << "\n"
       << "examined: " << r.examined << "\n"
       << "min_ratio: " << to_string(r.min_ratio) << "\n";
    for (const Poly& w : r.witness) os << "witness: " << to_string(w) << "\n";
    return os.str();
}

namespace {

// Options shared by the verbs; each subcommand binds the subset it uses.
struct Options {
    std::vector<std::string> polys;
    int arity = 0;  // 0 = infer
    bool json_out = false;
    bool bombieri = false;
    int nodes = 0;  // 0 = auto
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned smax = 0;
    int workers = 1;
    std::string t = "1/4";
    std::string mode = "one";
    std::string pattern;
    int degree = 1;
    std::string grid = "-1,1";
    int factors = 2;
    std::uint64_t cap = 2'000'000;
    std::string check_type;
};

Format out_format(const Options& opt) {
    return opt.json_out ? Format::json : Format::text;
}

/// Arity needed by one polynomial text: w-variables sit after the largest
/// x-index of the same text.
int needed_arity(const std::string& text) {
    VariableScan scan = scan_variables(text);
    return scan.max_x + scan.max_w;
}

std::vector<Poly> parse_polys(const Options& opt, std::size_t expected) {
    if (opt.polys.size() != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " --poly argument(s), got " + std::to_string(opt.polys.size()));
    }
    int needed = 1;
    for (const std::string& text : opt.polys) needed = std::max(needed, needed_arity(text));
    int arity = needed;
    if (opt.arity > 0) {
        if (opt.arity < needed) {
            throw std::invalid_argument("explicit --arity " + std::to_string(opt.arity) +
                                        " is smaller than the largest variable index " +
                                        std::to_string(needed));
        }
        arity = opt.arity;
    }
    std::vector<Poly> out;
    out.reserve(opt.polys.size());
    for (const std::string& text : opt.polys) out.push_back(parse(text, arity));
    return out;
}

std::vector<Poly> parse_polys_at_least(const Options& opt, std::size_t minimum) {
    if (opt.polys.size() < minimum) {
        throw std::invalid_argument("expected at least " + std::to_string(minimum) +
                                    " --poly argument(s)");
    }
    Options clamped = opt;
    return parse_polys(clamped, opt.polys.size());
}

Rational parse_rational_text(const std::string& text) {
    Poly p = parse(text, 1);
    if (!p.is_zero() && p.total_degree() != 0) {
        throw std::invalid_argument("expected a rational constant, got '" + text + "'");
    }
    GaussianRational c = p.coeff(MultiIndex::zeros(1));
    if (!c.is_real()) throw std::invalid_argument("expected a real rational, got '" + text + "'");
    return c.re();
}

std::vector<GaussianRational> parse_grid(const std::string& text) {
    std::vector<GaussianRational> grid;
    std::string entry;
    std::istringstream stream(text);
    while (std::getline(stream, entry, ',')) {
        Poly p = parse(entry, 1);
        if (!p.is_zero() && p.total_degree() != 0) {
            throw std::invalid_argument("grid entries must be constants: '" + entry + "'");
        }
        grid.push_back(p.coeff(MultiIndex::zeros(1)));
    }
    if (grid.empty()) throw std::invalid_argument("empty coefficient grid");
    return grid;
}

int emit_verdict(const Verdict& v, const Options& opt, std::ostream& out) {
    out << report_render(v, out_format(opt));
    return v.holds ? 0 : 1;
}

int run_check(const Options& opt, std::ostream& out) {
    const std::string& type = opt.check_type;
    if (type == "bombieri") {
        return emit_verdict(check_bombieri_homogeneous(parse_polys_at_least(opt, 1)), opt, out);
    }
    if (type == "mixed") {
        auto ps = parse_polys(opt, 2);
        return emit_verdict(check_mixed_homogeneous(ps[0], ps[1]), opt, out);
    }
    if (type == "main") {
        return emit_verdict(check_theorem_main(parse_polys_at_least(opt, 1)), opt, out);
    }
    if (type == "topband") {
        auto ps = parse_polys(opt, 2);
        // Use the minimal valid bands read off the polynomials themselves.
        int j = ps[0].total_degree() - *ps[0].lowest_degree();
        int i = ps[1].total_degree() - *ps[1].lowest_degree();
        return emit_verdict(check_theorem_topband(ps[0], ps[1], j, i), opt, out);
    }
    if (type == "nonneg") {
        auto ps = parse_polys(opt, 2);
        return emit_verdict(check_nonnegative(ps[0], ps[1]), opt, out);
    }
    if (type == "even") {
        auto ps = parse_polys(opt, 2);
        return emit_verdict(check_even(ps[0], ps[1]), opt, out);
    }
    if (type == "disjoint") {
        auto ps = parse_polys(opt, 2);
        return emit_verdict(check_disjoint_equality(ps[0], ps[1]), opt, out);
    }
    if (type == "power") {
        auto ps = parse_polys(opt, 1);
        unsigned s = opt.smax == 0 ? 2 : opt.smax;
        return emit_verdict(check_power(ps[0], s), opt, out);
    }
    if (type == "mono") {
        return emit_verdict(check_monotonicity_counterexample(parse_rational_text(opt.t)), opt,
                            out);
    }
    throw std::invalid_argument("unknown check type '" + type +
                                "' (expected bombieri|mixed|main|topband|nonneg|even|disjoint|"
                                "power|mono)");
}

int run_ip(const Options& opt, std::ostream& out) {
    auto ps = parse_polys(opt, 2);
    GaussianRational value =
        opt.bombieri ? bombieri_inner(ps[0], ps[1]) : apolar_inner(ps[0], ps[1]);
    if (opt.json_out) {
        out << json{{"value", to_string(value)}}.dump() << "\n";
    } else {
        out << to_string(value) << "\n";
    }
    return 0;
}

int run_norm(const Options& opt, std::ostream& out) {
    auto ps = parse_polys(opt, 1);
    Rational value =
        opt.bombieri ? bombieri_inner(ps[0], ps[0]).re() : apolar_norm_sq(ps[0]);
    if (opt.json_out) {
        out << json{{"norm_sq", to_string(value)}}.dump() << "\n";
    } else {
        out << to_string(value) << "\n";
    }
    return 0;
}

int run_homogenize(const Options& opt, std::ostream& out) {
    auto ps = parse_polys(opt, 1);
    const Poly& p = ps[0];
    Poly result(1);
    if (opt.mode == "one") {
        result = homogenize_one_var(p);
    } else if (opt.mode == "even") {
        result = homogenize_even_two_var(p);
    } else if (opt.mode == "many") {
        HomogenizationPattern pattern;
        if (opt.pattern.empty()) {
            pattern = HomogenizationPattern::one_var(p.total_degree());
        } else {
            std::istringstream stream(opt.pattern);
            std::string entry;
            while (std::getline(stream, entry, ',')) pattern.levels.push_back(std::stoi(entry));
        }
        result = homogenize_many_var(p, pattern);
    } else {
        throw std::invalid_argument("unknown mode '" + opt.mode + "' (expected one|even|many)");
    }
    if (opt.json_out) {
        out << json{{"poly", to_string(result, p.arity())},
                    {"arity", result.arity()},
                    {"base_vars", p.arity()}}
                   .dump()
            << "\n";
    } else {
        out << to_string(result, p.arity()) << "\n";
    }
    return 0;
}

int run_oracle(const Options& opt, std::ostream& out) {
    auto ps = parse_polys(opt, 2);
    OracleEstimate estimate;
    if (opt.samples > 0) {
        estimate = inner_product_montecarlo(ps[0], ps[1], opt.samples, opt.seed, opt.workers);
    } else {
        int nodes = opt.nodes > 0 ? opt.nodes : certified_nodes(ps[0], ps[1]);
        estimate = inner_product_quadrature(ps[0], ps[1], nodes);
    }
    out << report_render(estimate, out_format(opt));
    return 0;
}

int run_powers(const Options& opt, std::ostream& out) {
    auto ps = parse_polys(opt, 1);
    unsigned smax = opt.smax == 0 ? 8 : opt.smax;
    PowerRootReport report = power_root_sequence(ps[0], smax);
    if (opt.json_out) {
        out << json{{"roots", report.roots},
                    {"growth_factor", report.growth_factor},
                    {"grew", report.grew}}
                   .dump()
            << "\n";
        return 0;
    }
    for (std::size_t s = 0; s < report.roots.size(); ++s) {
        out << "s=" << (s + 1) << ": " << format_float(report.roots[s]) << "\n";
    }
    out << "grew by factor >= " << format_float(report.growth_factor) << ": "
        << (report.grew ? "yes" : "no") << "\n";
    return 0;
}

int run_search(const Options& opt, std::ostream& out) {
    SearchConfig config;
    config.arity = opt.arity > 0 ? opt.arity : 1;
    config.max_degree = opt.degree;
    config.grid = parse_grid(opt.grid);
    config.factors = opt.factors;
    config.exhaustive_cap = opt.cap;
    if (opt.samples > 0) config.samples = static_cast<std::uint64_t>(opt.samples);
    config.seed = opt.seed;
    config.workers = opt.workers;
    out << report_render(search_min_ratio(config), out_format(opt));
    return 0;
}

int run_paper_examples(const Options& opt, std::ostream& out) {
    // Product of two non-homogeneous linear factors: the constant-1
    // inequality fails, the degree-sum factorial constant repairs it.
    Poly x = Poly::variable(1, 1);
    Poly one = Poly::constant(1, GaussianRational(1));
    Poly p1 = x - one;
    Poly p2 = x + one;
    Rational n1 = apolar_norm_sq(p1);
    Rational n2 = apolar_norm_sq(p2);
    Rational product_norm = apolar_norm_sq(p1 * p2);
    if (n1 != 2 || n2 != 2 || product_norm != 3) {
        throw std::logic_error("failure example norms changed");
    }
    bool constant1_holds = product_norm >= n1 * n2;
    if (constant1_holds) throw std::logic_error("constant-1 inequality unexpectedly holds");
    Verdict main_verdict = check_theorem_main({p1, p2});
    if (!main_verdict.holds) throw std::logic_error("degree-sum constant verdict failed");

    // Equality at an interior parameter for one-variable factors.
    auto f_at = [&](const Rational& t) -> Rational {
        return apolar_norm_sq((x - one) * (GaussianRational(t) * one + x));
    };
    auto g_at = [&](const Rational& t) -> Rational {
        return apolar_norm_sq(x - one) * apolar_norm_sq(GaussianRational(t) * one + x);
    };
    Rational f0 = f_at(0), f1 = f_at(1), g0 = g_at(0), g1 = g_at(1);
    if (f0 != 3 || f1 != 3 || g0 != 2 || g1 != 4) {
        throw std::logic_error("equality example boundary values changed");
    }
    Rational c = find_equality_parameter();
    Rational fc = f_at(c), gc = g_at(c);
    if (fc != gc || !(c > 0 && c < 1)) throw std::logic_error("equality parameter invalid");

    // Monotonicity counterexample at t = 1/4.
    Verdict mono = check_monotonicity_counterexample(Rational(1, 4));
    if (!mono.holds) throw std::logic_error("monotonicity counterexample not confirmed");

    if (opt.json_out) {
        json j{{"failure_example",
                {{"norm_sq_factors", {to_string(n1), to_string(n2)}},
                 {"product_norm_sq", to_string(product_norm)},
                 {"constant1_holds", constant1_holds},
                 {"main", verdict_json(main_verdict)}}},
               {"equality_parameter",
                {{"f0", to_string(f0)},
                 {"f1", to_string(f1)},
                 {"g0", to_string(g0)},
                 {"g1", to_string(g1)},
                 {"c", to_string(c)},
                 {"fc", to_string(fc)}}},
               {"monotonicity", verdict_json(mono)}};
        out << j.dump() << "\n";
        return 0;
    }
    out << "[failure-example] norm_sq(x1 - 1) = " << to_string(n1) << ", norm_sq(x1 + 1) = "
        << to_string(n2) << ", product of norms = " << to_string(n1 * n2) << "\n";
    out << "[failure-example] norm_sq(x1^2 - 1) = " << to_string(product_norm)
        << ", constant-1 inequality FAILS\n";
    out << "[failure-example] with constant 2: 2 * " << to_string(product_norm) << " = "
        << to_string(2 * product_norm) << " >= " << to_string(n1 * n2) << " HOLDS\n";
    out << "[equality-parameter] f(0) = " << to_string(f0) << ", f(1) = " << to_string(f1)
        << ", g(0) = " << to_string(g0) << ", g(1) = " << to_string(g1) << "\n";
    out << "[equality-parameter] c = " << to_string(c) << ", f(c) = g(c) = " << to_string(fc)
        << "\n";
    out << "[monotonicity] t = 1/4: norm_sq((1 + t*x1)*(1 - t*x1)) = " << to_string(mono.lhs_sq)
        << " < " << to_string(mono.rhs_sq) << " = norm_sq(1 - t*x1) CONFIRMED\n";
    return 0;
}

void bind_common(CLI::App* sub, Options& opt) {
    sub->add_flag("--json", opt.json_out, "emit a JSON report");
    sub->add_option("--arity", opt.arity, "total number of variables (default: inferred)");
}

void bind_polys(CLI::App* sub, Options& opt) {
    sub->add_option("--poly", opt.polys, "polynomial in the text grammar (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact apolar inner products, Bombieri-type checks and oracles"};
    app.name("apolaris");
    app.require_subcommand(1);

    CLI::App* ip = app.add_subcommand("ip", "apolar (or Bombieri) inner product of two polynomials");
    bind_common(ip, opt);
    bind_polys(ip, opt);
    ip->add_flag("--bombieri", opt.bombieri, "use the Bombieri normalization");

    CLI::App* norm = app.add_subcommand("norm", "squared apolar norm of a polynomial");
    bind_common(norm, opt);
    bind_polys(norm, opt);
    norm->add_flag("--bombieri", opt.bombieri, "use the Bombieri normalization");

    CLI::App* check = app.add_subcommand("check", "run an inequality check");
    bind_common(check, opt);
    bind_polys(check, opt);
    check->add_option("type", opt.check_type,
                      "bombieri|mixed|main|topband|nonneg|even|disjoint|power|mono")
        ->required();
    check->add_option("--smax", opt.smax, "power for 'check power' (default 2)");
    check->add_option("--t", opt.t, "parameter for 'check mono', as p/q (default 1/4)");

    CLI::App* hom = app.add_subcommand("homogenize", "homogenize a polynomial");
    bind_common(hom, opt);
    bind_polys(hom, opt);
    hom->add_option("--mode", opt.mode, "one|even|many (default one)");
    hom->add_option("--pattern", opt.pattern,
                    "comma-separated fresh-variable ids per level, for --mode many");

    CLI::App* oracle = app.add_subcommand("oracle", "floating-point inner product oracle");
    bind_common(oracle, opt);
    bind_polys(oracle, opt);
    oracle->add_option("--nodes", opt.nodes, "quadrature nodes per axis (default: certified)");
    oracle->add_option("--samples", opt.samples, "Monte Carlo samples (switches method)");
    oracle->add_option("--seed", opt.seed, "Monte Carlo seed (default 0)");
    oracle->add_option("--workers", opt.workers, "worker threads (result-invariant)");

    CLI::App* powers = app.add_subcommand("powers", "growth of s-th roots of power norms");
    bind_common(powers, opt);
    bind_polys(powers, opt);
    powers->add_option("--smax", opt.smax, "largest power (default 8)");

    CLI::App* search = app.add_subcommand("search", "minimum product-norm ratio over a grid");
    bind_common(search, opt);
    search->add_option("--degree", opt.degree, "max total degree of candidates (default 1)");
    search->add_option("--grid", opt.grid, "comma-separated coefficients (default \"-1,1\")");
    search->add_option("--factors", opt.factors, "number of factors (default 2)");
    search->add_option("--cap", opt.cap, "exhaustive-mode tuple cap");
    search->add_option("--samples", opt.samples, "samples when above the cap");
    search->add_option("--seed", opt.seed, "sampling seed");
    search->add_option("--workers", opt.workers, "worker threads (result-invariant)");

    CLI::App* paper = app.add_subcommand("paper-examples", "reproduce the worked examples");
    bind_common(paper, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ip->parsed()) return run_ip(opt, out);
        if (norm->parsed()) return run_norm(opt, out);
        if (check->parsed()) return run_check(opt, out);
        if (hom->parsed()) return run_homogenize(opt, out);
        if (oracle->parsed()) return run_oracle(opt, out);
        if (powers->parsed()) return run_powers(opt, out);
        if (search->parsed()) return run_search(opt, out);
        if (paper->parsed()) return run_paper_examples(opt, out);
        err << "no verb selected\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace apolaris::cli
