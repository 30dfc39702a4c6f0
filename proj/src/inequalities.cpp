#include "apolaris/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace apolaris {

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::bombieri: return "bombieri";
        case TheoremId::mixed: return "mixed";
        case TheoremId::main: return "main";
        case TheoremId::topband: return "topband";
        case TheoremId::nonneg: return "nonneg";
        case TheoremId::even: return "even";
        case TheoremId::disjoint: return "disjoint";
        case TheoremId::power: return "power";
        case TheoremId::mono: return "mono";
        case TheoremId::search: return "search";
    }
    return "?";
}

namespace {

void require_nonzero(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
}

void require_same_arity(const std::vector<Poly>& ps) {
    for (const Poly& p : ps) {
        if (p.arity() != ps.front().arity()) throw std::invalid_argument("arity mismatch");
    }
}

Verdict make_ge_verdict(TheoremId id, Rational constant, Rational lhs_sq, Rational rhs_sq) {
    Verdict v;
    v.theorem = id;
    v.constant = std::move(constant);
    v.lhs_sq = std::move(lhs_sq);
    v.rhs_sq = std::move(rhs_sq);
    v.holds = v.constant * v.lhs_sq >= v.rhs_sq;
    if (v.rhs_sq != 0) v.ratio = v.constant * v.lhs_sq / v.rhs_sq;
    return v;
}

Poly product_of(const std::vector<Poly>& ps) {
    Poly acc = ps.front();
    for (std::size_t k = 1; k < ps.size(); ++k) acc = acc * ps[k];
    return acc;
}

Rational product_of_norm_sq(const std::vector<Poly>& ps) {
    Rational acc = 1;
    for (const Poly& p : ps) acc *= apolar_norm_sq(p);
    return acc;
}

}  // namespace

Verdict check_bombieri_homogeneous(const std::vector<Poly>& factors) {
    if (factors.empty()) throw std::invalid_argument("no factors");
    require_same_arity(factors);
    for (const Poly& f : factors) {
        require_nonzero(f);
        if (!f.is_homogeneous()) throw std::invalid_argument("factor is not homogeneous");
    }
    Verdict v = make_ge_verdict(TheoremId::bombieri, 1, apolar_norm_sq(product_of(factors)),
                                product_of_norm_sq(factors));
    if (!v.holds) {
        // The homogeneous inequality is taken as ground truth; reaching this
        // line means the arithmetic itself is broken.
        throw std::logic_error("internal error: homogeneous Bombieri inequality violated");
    }
    return v;
}

Verdict check_mixed_homogeneous(const Poly& p, const Poly& f) {
    if (p.arity() != f.arity()) throw std::invalid_argument("arity mismatch");
    require_nonzero(p);
    require_nonzero(f);
    if (!f.is_homogeneous()) throw std::invalid_argument("second factor must be homogeneous");
    return make_ge_verdict(TheoremId::mixed, 1, apolar_norm_sq(p * f),
                           apolar_norm_sq(p) * apolar_norm_sq(f));
}

Verdict check_theorem_main(const std::vector<Poly>& factors) {
    if (factors.empty()) throw std::invalid_argument("no factors");
    require_same_arity(factors);
    unsigned long degree_sum = 0;
    for (const Poly& f : factors) {
        require_nonzero(f);
        degree_sum += static_cast<unsigned long>(f.total_degree());
    }
    return make_ge_verdict(TheoremId::main, Rational(factorial(degree_sum)),
                           apolar_norm_sq(product_of(factors)), product_of_norm_sq(factors));
}

Verdict check_theorem_topband(const Poly& p, const Poly& q, int j, int i) {
    if (p.arity() != q.arity()) throw std::invalid_argument("arity mismatch");
    require_nonzero(p);
    require_nonzero(q);
    int m = p.total_degree();
    int n = q.total_degree();
    if (j < 0 || j > m || i < 0 || i > n) throw std::invalid_argument("band out of range");
    int min_j = m - *p.lowest_degree();
    int min_i = n - *q.lowest_degree();
    if (j < min_j) throw std::invalid_argument("first factor has a component below its band");
    if (i < min_i) throw std::invalid_argument("second factor has a component below its band");
    Verdict v = make_ge_verdict(TheoremId::topband,
                                Rational(factorial(static_cast<unsigned long>(j + i))),
                                apolar_norm_sq(p * q), apolar_norm_sq(p) * apolar_norm_sq(q));
    v.note = "minimal valid band: j=" + std::to_string(min_j) + ", i=" + std::to_string(min_i);
    return v;
}

Verdict check_nonnegative(const Poly& p, const Poly& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("arity mismatch");
    require_nonzero(p);
    require_nonzero(q);
    for (const Poly* poly : {&p, &q}) {
        for (const auto& [alpha, c] : poly->terms()) {
            if (!c.is_real() || c.re() < 0) {
                throw std::invalid_argument("coefficients must be real and non-negative");
            }
        }
    }
    return make_ge_verdict(TheoremId::nonneg, 1, apolar_norm_sq(p * q),
                           apolar_norm_sq(p) * apolar_norm_sq(q));
}

Verdict check_even(const Poly& p, const Poly& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("arity mismatch");
    require_nonzero(p);
    require_nonzero(q);
    for (const Poly* poly : {&p, &q}) {
        for (const auto& [alpha, c] : poly->terms()) {
            for (int v = 0; v < alpha.arity(); ++v) {
                if (alpha[v] % 2 != 0) throw std::invalid_argument("odd exponent present");
            }
        }
    }
    int m = p.total_degree();
    int n = q.total_degree();
    if (m == 0 || n == 0) throw std::invalid_argument("degrees must be even and nonzero");
    Integer half_fac = factorial(static_cast<unsigned long>((m + n) / 2));
    return make_ge_verdict(TheoremId::even, Rational(half_fac * half_fac),
                           apolar_norm_sq(p * q), apolar_norm_sq(p) * apolar_norm_sq(q));
}

Verdict check_disjoint_equality(const Poly& p, const Poly& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("arity mismatch");
    std::set<int> support;
    for (const auto& [alpha, c] : p.terms()) {
        for (int v = 0; v < alpha.arity(); ++v) {
            if (alpha[v] > 0) support.insert(v);
        }
    }
    for (const auto& [alpha, c] : q.terms()) {
        for (int v = 0; v < alpha.arity(); ++v) {
            if (alpha[v] > 0 && support.count(v)) {
                throw std::invalid_argument("variable supports overlap");
            }
        }
    }
    Verdict v;
    v.theorem = TheoremId::disjoint;
    v.constant = 1;
    v.lhs_sq = apolar_norm_sq(p * q);
    v.rhs_sq = apolar_norm_sq(p) * apolar_norm_sq(q);
    v.holds = v.lhs_sq == v.rhs_sq;
    if (v.rhs_sq != 0) v.ratio = v.lhs_sq / v.rhs_sq;
    return v;
}

namespace {

// Coefficients (ascending) of t -> ||P(x, t)||^2 where the variable `param`
// (1-based) is treated as a real parameter: group the terms of P by their
// exponents on the other variables; each group contributes
// alpha_rest! * c(t) * conj-coefficients c(t).
std::vector<Rational> norm_sq_in_param(const Poly& p, int param) {
    std::map<MultiIndex, std::map<int, GaussianRational>> groups;
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> rest = alpha.exponents();
        int t_exp = rest[param - 1];
        rest[param - 1] = 0;
        groups[MultiIndex(std::move(rest))][t_exp] = c;
    }
    std::vector<Rational> out;
    auto bump = [&](std::size_t deg) {
        if (out.size() <= deg) out.resize(deg + 1, Rational(0));
    };
    for (const auto& [rest, coeffs] : groups) {
        Rational weight(rest.factorial());
        for (const auto& [e, ce] : coeffs) {
            for (const auto& [f, cf] : coeffs) {
                GaussianRational prod = ce * cf.conj();
                bump(static_cast<std::size_t>(e + f));
                out[static_cast<std::size_t>(e + f)] += weight * prod.re();
                // Imaginary parts cancel pairwise for real t.
            }
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Rational eval_coeffs(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// Exact square root of a non-negative rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer num = q.get_num();
    Integer den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
}

// Roots of a rational-coefficient polynomial of degree <= 2 that lie in (0,1).
std::vector<Rational> roots_in_unit_interval(const std::vector<Rational>& h) {
    std::vector<Rational> roots;
    auto in_range = [](const Rational& r) { return r > 0 && r < 1; };
    if (h.size() == 2) {
        Rational r = -h[0] / h[1];
        if (in_range(r)) roots.push_back(std::move(r));
    } else if (h.size() == 3) {
        Rational disc = h[1] * h[1] - 4 * h[2] * h[0];
        auto sq = rational_sqrt(disc);
        if (!sq) throw std::domain_error("equality parameter is not rational");
        for (int sign : {-1, 1}) {
            Rational r = (-h[1] + sign * *sq) / (2 * h[2]);
            if (in_range(r)) roots.push_back(std::move(r));
        }
    }
    return roots;
}

}  // namespace

Rational find_equality_parameter() {
    // f(t) = ||(-1+x)(t+x)||^2 and g(t) = ||-1+x||^2 * ||t+x||^2, with the
    // parameter t carried as a second variable and eliminated exactly.
    Poly a = Poly::variable(2, 1) - Poly::constant(2, GaussianRational(1));
    Poly b = Poly::variable(2, 1) + Poly::variable(2, 2);
    std::vector<Rational> f = norm_sq_in_param(a * b, 2);
    std::vector<Rational> a_norm = norm_sq_in_param(a, 2);
    std::vector<Rational> b_norm = norm_sq_in_param(b, 2);
    if (a_norm.size() != 1) throw std::logic_error("internal error: first factor depends on t");
    std::vector<Rational> g(b_norm.size());
    for (std::size_t k = 0; k < b_norm.size(); ++k) g[k] = a_norm[0] * b_norm[k];

    auto check = [](const Rational& got, long want, const char* what) {
        if (got != want) throw std::logic_error(std::string("internal error: ") + what);
    };
    check(eval_coeffs(f, 0), 3, "f(0) != 3");
    check(eval_coeffs(f, 1), 3, "f(1) != 3");
    check(eval_coeffs(g, 0), 2, "g(0) != 2");
    check(eval_coeffs(g, 1), 4, "g(1) != 4");

    std::vector<Rational> h(std::max(f.size(), g.size()), Rational(0));
    for (std::size_t k = 0; k < f.size(); ++k) h[k] += f[k];
    for (std::size_t k = 0; k < g.size(); ++k) h[k] -= g[k];
    while (!h.empty() && h.back() == 0) h.pop_back();

    std::vector<Rational> roots = roots_in_unit_interval(h);
    if (roots.empty()) throw std::domain_error("no equality parameter in (0,1)");
    Rational c = *std::min_element(roots.begin(), roots.end());
    if (eval_coeffs(f, c) != eval_coeffs(g, c)) {
        throw std::logic_error("internal error: solved parameter does not equalize f and g");
    }
    return c;
}

Verdict check_monotonicity_counterexample(const Rational& t) {
    Poly one = Poly::constant(1, GaussianRational(1));
    Poly tx = GaussianRational(t) * Poly::variable(1, 1);
    Poly lhs_poly = (one + tx) * (one - tx);
    Poly rhs_poly = one * (one - tx);

    Verdict v;
    v.theorem = TheoremId::mono;
    v.constant = 1;
    v.lhs_sq = apolar_norm_sq(lhs_poly);
    v.rhs_sq = apolar_norm_sq(rhs_poly);

    Rational t2 = t * t;
    Rational closed_lhs = 1 + 2 * t2 * t2;
    Rational closed_rhs = 1 + t2;
    if (v.lhs_sq != closed_lhs || v.rhs_sq != closed_rhs) {
        throw std::logic_error("internal error: product norms disagree with closed forms");
    }

    bool in_range = t > 0 && t < Rational(1, 2);
    v.holds = in_range && v.lhs_sq < v.rhs_sq;
    if (v.rhs_sq != 0) v.ratio = v.lhs_sq / v.rhs_sq;
    if (!in_range) v.note = "t outside (0, 1/2); sides reported only";
    return v;
}

Verdict check_power(const Poly& p, unsigned s) {
    require_nonzero(p);
    if (s == 0) throw std::invalid_argument("power must be positive");
    Rational base = apolar_norm_sq(p);
    Rational rhs = 1;
    for (unsigned k = 0; k < s; ++k) rhs *= base;
    return make_ge_verdict(TheoremId::power, 1, apolar_norm_sq(poly_pow(p, s)), std::move(rhs));
}

PowerRootReport power_root_sequence(const Poly& p, unsigned s_max, PowerRootOptions opts) {
    require_nonzero(p);
    if (p.total_degree() < 1) throw std::invalid_argument("constant polynomial");
    if (s_max == 0) throw std::invalid_argument("s_max must be positive");
    PowerRootReport report;
    report.growth_factor = opts.growth_factor;
    Poly power = Poly::constant(p.arity(), GaussianRational(1));
    for (unsigned s = 1; s <= s_max; ++s) {
        power = power * p;
        if (power.term_count() > opts.term_cap) {
            throw std::length_error("term cap exceeded while expanding powers");
        }
        double norm_sq = to_double(apolar_norm_sq(power));
        report.roots.push_back(std::pow(norm_sq, 1.0 / (2.0 * s)));
    }
    report.grew = report.roots.back() >= report.roots.front() * opts.growth_factor;
    return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<MultiIndex> monomials_up_to(int arity, int max_degree) {
    std::vector<MultiIndex> out;
    std::vector<int> current(arity, 0);
    // Depth-first over exponent vectors with total degree <= max_degree.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity) {
            out.emplace_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

struct SearchSpace {
    const SearchConfig& config;
    std::vector<MultiIndex> monomials;
    unsigned __int128 candidates = 0;   // grid^monomials
    unsigned __int128 tuples = 0;       // candidates^factors, saturated
    bool overflow = false;

    explicit SearchSpace(const SearchConfig& cfg) : config(cfg) {
        monomials = monomials_up_to(cfg.arity, cfg.max_degree);
        const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 100;
        candidates = 1;
        for (std::size_t k = 0; k < monomials.size(); ++k) {
            candidates *= config.grid.size();
            if (candidates > limit) {
                overflow = true;
                return;
            }
        }
        tuples = 1;
        for (int k = 0; k < config.factors; ++k) {
            tuples *= candidates;
            if (tuples > limit) {
                overflow = true;
                return;
            }
        }
    }

    Poly decode_candidate(unsigned __int128 idx) const {
        Poly::TermMap terms;
        for (const MultiIndex& mono : monomials) {
            std::size_t digit = static_cast<std::size_t>(idx % config.grid.size());
            idx /= config.grid.size();
            const GaussianRational& c = config.grid[digit];
            if (!c.is_zero()) terms.emplace(mono, c);
        }
        return Poly::from_map(config.arity, std::move(terms));
    }

    std::optional<std::vector<Poly>> decode_tuple(const std::vector<unsigned __int128>& idx) const {
        std::vector<Poly> factors;
        factors.reserve(config.factors);
        for (int k = 0; k < config.factors; ++k) {
            Poly f = decode_candidate(idx[k]);
            if (f.is_zero()) return std::nullopt;
            factors.push_back(std::move(f));
        }
        return factors;
    }
};

struct SearchBest {
    bool found = false;
    Rational ratio;
    std::vector<std::string> witness_text;
    std::vector<Poly> witness;
    std::uint64_t examined = 0;

    void offer(Rational r, std::vector<Poly> factors) {
        ++examined;
        std::vector<std::string> text;
        text.reserve(factors.size());
        for (const Poly& f : factors) text.push_back(to_string(f));
        if (!found || r < ratio || (r == ratio && text < witness_text)) {
            found = true;
            ratio = std::move(r);
            witness_text = std::move(text);
            witness = std::move(factors);
        }
    }

    void merge(SearchBest&& other) {
        examined += other.examined;
        if (!other.found) return;
        if (!found || other.ratio < ratio ||
            (other.ratio == ratio && other.witness_text < witness_text)) {
            found = true;
            ratio = std::move(other.ratio);
            witness_text = std::move(other.witness_text);
            witness = std::move(other.witness);
        }
    }
};

template <typename Fn>
SearchBest run_partitioned(std::uint64_t total, int workers, Fn&& per_index) {
    workers = std::max(1, workers);
    std::uint64_t chunk = total / workers + 1;
    std::vector<SearchBest> partials(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        threads.emplace_back([&, w, lo, hi] {
            for (std::uint64_t t = lo; t < hi; ++t) per_index(t, partials[w]);
        });
    }
    for (auto& th : threads) th.join();
    SearchBest best;
    for (auto& partial : partials) best.merge(std::move(partial));
    return best;
}

}  // namespace

SearchReport search_min_ratio(const SearchConfig& config) {
    if (config.arity < 1) throw std::invalid_argument("arity must be positive");
    if (config.max_degree < 0) throw std::invalid_argument("negative degree bound");
    if (config.factors < 1) throw std::invalid_argument("factor count must be positive");
    if (config.grid.empty()) throw std::invalid_argument("empty coefficient grid");

    SearchSpace space(config);
    bool exhaustive = !space.overflow && space.tuples <= config.exhaustive_cap;

    auto evaluate = [&](const std::vector<unsigned __int128>& idx, SearchBest& best) {
        auto factors = space.decode_tuple(idx);
        if (!factors) return;
        Rational rhs = product_of_norm_sq(*factors);
        Rational lhs = apolar_norm_sq(product_of(*factors));
        best.offer(lhs / rhs, std::move(*factors));
    };

    SearchBest best;
    if (exhaustive) {
        best = run_partitioned(static_cast<std::uint64_t>(space.tuples), config.workers,
                               [&](std::uint64_t t, SearchBest& acc) {
                                   std::vector<unsigned __int128> idx(config.factors);
                                   unsigned __int128 rest = t;
                                   for (int k = 0; k < config.factors; ++k) {
                                       idx[k] = rest % space.candidates;
                                       rest /= space.candidates;
                                   }
                                   evaluate(idx, acc);
                               });
    } else {
        // Counter-based index derivation keeps sampling independent of the
        // worker partition. Spaces wider than 2^64 candidates per factor are
        // sampled through a 64-bit window.
        std::uint64_t window = static_cast<std::uint64_t>(
            std::min<unsigned __int128>(space.candidates, ~std::uint64_t(0)));
        best = run_partitioned(config.samples, config.workers,
                               [&](std::uint64_t i, SearchBest& acc) {
                                   std::vector<unsigned __int128> idx(config.factors);
                                   for (int k = 0; k < config.factors; ++k) {
                                       std::uint64_t h = splitmix64(
                                           config.seed ^ (0x9E3779B97F4A7C15ULL *
                                                          (i * config.factors + k + 1)));
                                       idx[k] = h % window;
                                   }
                                   evaluate(idx, acc);
                               });
    }

    if (!best.found) throw std::invalid_argument("empty search space");
    SearchReport report;
    report.min_ratio = std::move(best.ratio);
    report.witness = std::move(best.witness);
    report.exhaustive = exhaustive;
    report.examined = best.examined;
    return report;
}

}  // namespace apolaris
