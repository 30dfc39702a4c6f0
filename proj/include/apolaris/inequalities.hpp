#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolaris/apolar.hpp"
#include "apolaris/poly.hpp"

namespace apolaris {

enum class TheoremId { bombieri, mixed, main, topband, nonneg, even, disjoint, power, mono, search };

const char* theorem_name(TheoremId id);

/// Outcome of an inequality or equality check. All comparisons are made on
/// squared norms with exact rationals. For the >=-type theorems, holds means
/// constant * lhs_sq >= rhs_sq and ratio = constant * lhs_sq / rhs_sq (>= 1
/// whenever the check holds and rhs_sq > 0). The disjoint check asserts
/// equality instead, and the monotonicity counterexample asserts strict <.
struct Verdict {
    TheoremId theorem;
    Rational constant;
    Rational lhs_sq;
    Rational rhs_sq;
    bool holds = false;
    std::optional<Rational> ratio;
    std::optional<std::string> note;
    std::vector<std::string> witness;
};

/// ||f1*...*fn||^2 >= ||f1||^2 * ... * ||fn||^2 for nonzero homogeneous
/// factors. This is the classical inequality the rest of the library builds
/// on; a false outcome is an internal error and throws std::logic_error.
Verdict check_bombieri_homogeneous(const std::vector<Poly>& factors);

/// ||P*f||^2 >= ||P||^2 * ||f||^2 with f homogeneous and P arbitrary nonzero.
Verdict check_mixed_homogeneous(const Poly& p, const Poly& f);

/// (n1+...+ns)! * ||P1*...*Ps||^2 >= ||P1||^2 * ... * ||Ps||^2 for arbitrary
/// nonzero factors of total degrees n1..ns.
Verdict check_theorem_main(const std::vector<Poly>& factors);

/// (j+i)! * ||P*Q||^2 >= ||P||^2 * ||Q||^2 when P has homogeneous components
/// only in degrees deg(P)-j .. deg(P) and Q only in deg(Q)-i .. deg(Q). The
/// declared bands are validated against the polynomials; the minimal valid
/// band is reported in the verdict note.
Verdict check_theorem_topband(const Poly& p, const Poly& q, int j, int i);

/// Constant-1 inequality for polynomials with real non-negative coefficients.
Verdict check_nonnegative(const Poly& p, const Poly& q);

/// ([(m+n)/2]!)^2 * ||P*Q||^2 >= ||P||^2 * ||Q||^2 when every exponent of
/// every variable is even and m = deg P, n = deg Q are even and nonzero.
Verdict check_even(const Poly& p, const Poly& q);

/// Exact equality ||P*Q||^2 = ||P||^2 * ||Q||^2 for variable-disjoint P, Q.
Verdict check_disjoint_equality(const Poly& p, const Poly& q);

/// The parameter c in (0,1) with ||(-1+x)(c+x)||^2 = ||-1+x||^2 * ||c+x||^2,
/// solved exactly from the rational polynomials f(t) and g(t).
Rational find_equality_parameter();

/// Demonstrates that adjoining a higher-degree homogeneous part can shrink a
/// product norm: ||(1+tx)(1-tx)||^2 < ||1*(1-tx)||^2 for 0 < t < 1/2. Both
/// sides are computed from the polynomial products and checked against the
/// closed forms 1+2t^4 and 1+t^2. holds means the counterexample is
/// confirmed (t in range and strict <); out-of-range t reports both sides
/// with holds = false.
Verdict check_monotonicity_counterexample(const Rational& t);

/// ||P^s||^2 >= (||P||^2)^s for nonzero P and s >= 1.
Verdict check_power(const Poly& p, unsigned s);

struct PowerRootOptions {
    std::size_t term_cap = 200000;
    double growth_factor = 2.0;
};

/// The sequence (||P^s||^2)^(1/(2s)) for s = 1..s_max, computed exactly and
/// reported as floats. Requires deg P >= 1.
struct PowerRootReport {
    std::vector<double> roots;
    double growth_factor = 2.0;
    bool grew = false;  // last value >= first value * growth_factor
};
PowerRootReport power_root_sequence(const Poly& p, unsigned s_max, PowerRootOptions opts = {});

/// Search space: every polynomial of the given arity whose coefficients (on
/// all monomials of total degree <= max_degree) come from `grid`. Tuples with
/// a zero factor are skipped. Exhaustive below the cap, seeded sampling above.
struct SearchConfig {
    int arity = 1;
    int max_degree = 1;
    std::vector<GaussianRational> grid;
    int factors = 2;
    std::uint64_t exhaustive_cap = 2'000'000;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct SearchReport {
    Rational min_ratio;          // ||prod||^2 / prod of ||.||^2 at the witness
    std::vector<Poly> witness;
    bool exhaustive = true;
    std::uint64_t examined = 0;  // valid tuples evaluated
};

/// Minimum of ||P1*...*Ps||^2 / (||P1||^2*...*||Ps||^2) over the space, with
/// ties broken by lexicographic witness strings. Deterministic for a fixed
/// config, independent of the worker count.
SearchReport search_min_ratio(const SearchConfig& config);

}  // namespace apolaris
