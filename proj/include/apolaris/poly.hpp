#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolaris/gaussian_rational.hpp"
#include "apolaris/multi_index.hpp"

namespace apolaris {

/// Sparse multivariate polynomial with Gaussian-rational coefficients and a
/// fixed arity. Stored coefficients are always nonzero and keyed by their
/// exponent vector in lexicographic order. Values are immutable once built;
/// every operation returns a fresh polynomial.
class Poly {
public:
    using TermMap = std::map<MultiIndex, GaussianRational>;

    /// The zero polynomial of the given arity.
    explicit Poly(int arity);

    static Poly constant(int arity, GaussianRational c);
    static Poly monomial(int arity, MultiIndex alpha, GaussianRational c);
    /// x_index as a polynomial; index is 1-based.
    static Poly variable(int arity, int index);
    /// Validates key lengths and prunes zero coefficients.
    static Poly from_map(int arity, TermMap terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; empty for the zero polynomial.
    std::optional<int> degree() const;
    /// Total degree; throws std::domain_error on the zero polynomial.
    int total_degree() const;

    GaussianRational coeff(const MultiIndex& alpha) const;

    /// Sub-polynomial of the terms with |alpha| = j (zero when absent).
    Poly homogeneous_component(int j) const;
    bool is_homogeneous() const;
    /// Smallest degree carrying a nonzero term; empty for the zero polynomial.
    std::optional<int> lowest_degree() const;

    /// Coefficientwise conjugation.
    Poly conjugate() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    /// Exact sparse Cauchy product.
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    int arity_;
    TermMap terms_;
};

/// Q applied as a differential operator to P: each variable of Q becomes the
/// corresponding partial derivative. Coefficients of Q are used as given.
Poly apply_diff(const Poly& q, const Poly& p);

/// Floating evaluation; terms are accumulated in lexicographic key order.
std::complex<double> evaluate(const Poly& p, const std::vector<std::complex<double>>& point);

/// Renames variables through an injective map (1-based, one entry per
/// original variable) into a space of `new_arity` variables.
Poly substitute_disjoint_relabel(const Poly& p, const std::vector<int>& mapping, int new_arity);

/// Substitutes 1 for the given variable (1-based), merging terms. Arity is
/// unchanged; the variable simply no longer appears.
Poly substitute_one(const Poly& p, int var_index);

Poly poly_pow(const Poly& p, unsigned s);

/// Canonical form: terms in descending lexicographic order, coefficients in
/// lowest terms. Variables with index > base_vars print as w1, w2, ...;
/// base_vars < 0 means all variables print as x1, x2, ...
std::string to_string(const Poly& p, int base_vars = -1);

}  // namespace apolaris
