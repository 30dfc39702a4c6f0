#include "apolaris/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolaris {

namespace {

void require_positive_arity(int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
}

void require_same_arity(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
}

}  // namespace

Poly::Poly(int arity) : arity_(arity) {
    require_positive_arity(arity);
}

Poly Poly::constant(int arity, GaussianRational c) {
    Poly p(arity);
    if (!c.is_zero()) p.terms_.emplace(MultiIndex::zeros(arity), std::move(c));
    return p;
}

Poly Poly::monomial(int arity, MultiIndex alpha, GaussianRational c) {
    Poly p(arity);
    if (alpha.arity() != arity) throw std::invalid_argument("multi-index length != arity");
    if (!c.is_zero()) p.terms_.emplace(std::move(alpha), std::move(c));
    return p;
}

Poly Poly::variable(int arity, int index) {
    require_positive_arity(arity);
    if (index < 1 || index > arity) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(arity, 0);
    e[index - 1] = 1;
    return monomial(arity, MultiIndex(std::move(e)), GaussianRational(1));
}

Poly Poly::from_map(int arity, TermMap terms) {
    Poly p(arity);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.arity() != arity) throw std::invalid_argument("multi-index length != arity");
        if (it->second.is_zero()) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    p.terms_ = std::move(terms);
    return p;
}

std::optional<int> Poly::degree() const {
    std::optional<int> d;
    for (const auto& [alpha, c] : terms_) {
        int t = alpha.total();
        if (!d || t > *d) d = t;
    }
    return d;
}

int Poly::total_degree() const {
    auto d = degree();
    if (!d) throw std::domain_error("total degree of the zero polynomial");
    return *d;
}

GaussianRational Poly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? GaussianRational() : it->second;
}

Poly Poly::homogeneous_component(int j) const {
    Poly p(arity_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha.total() == j) p.terms_.emplace(alpha, c);
    }
    return p;
}

bool Poly::is_homogeneous() const {
    auto d = degree();
    if (!d) return true;
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.total() == *d; });
}

std::optional<int> Poly::lowest_degree() const {
    std::optional<int> d;
    for (const auto& [alpha, c] : terms_) {
        int t = alpha.total();
        if (!d || t < *d) d = t;
    }
    return d;
}

Poly Poly::conjugate() const {
    Poly p(arity_);
    for (const auto& [alpha, c] : terms_) p.terms_.emplace(alpha, c.conj());
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_arity(a, b);
    Poly::TermMap terms = a.terms_;
    for (const auto& [alpha, c] : b.terms_) {
        auto [it, inserted] = terms.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return Poly::from_map(a.arity_, std::move(terms));
}

Poly operator-(const Poly& a) {
    Poly p(a.arity_);
    for (const auto& [alpha, c] : a.terms_) p.terms_.emplace(alpha, -c);
    return p;
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_arity(a, b);
    Poly::TermMap terms;
    for (const auto& [alpha, c] : a.terms_) {
        for (const auto& [beta, d] : b.terms_) {
            GaussianRational prod = c * d;
            if (prod.is_zero()) continue;
            MultiIndex gamma = alpha.plus(beta);
            auto [it, inserted] = terms.try_emplace(std::move(gamma), std::move(prod));
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
    }
    return Poly::from_map(a.arity_, std::move(terms));
}

Poly operator*(const GaussianRational& s, const Poly& a) {
    Poly p(a.arity_);
    if (s.is_zero()) return p;
    for (const auto& [alpha, c] : a.terms_) {
        GaussianRational prod = s * c;
        if (!prod.is_zero()) p.terms_.emplace(alpha, std::move(prod));
    }
    return p;
}

Poly apply_diff(const Poly& q, const Poly& p) {
    require_same_arity(q, p);
    Poly::TermMap terms;
    for (const auto& [beta, d] : q.terms()) {
        for (const auto& [alpha, c] : p.terms()) {
            if (!alpha.dominates(beta)) continue;
            GaussianRational contrib = d * c * Rational(alpha.falling_factorial(beta));
            if (contrib.is_zero()) continue;
            MultiIndex gamma = alpha.minus(beta);
            auto [it, inserted] = terms.try_emplace(std::move(gamma), std::move(contrib));
            if (!inserted) it->second += contrib;
        }
    }
    return Poly::from_map(p.arity(), std::move(terms));
}

std::complex<double> evaluate(const Poly& p, const std::vector<std::complex<double>>& point) {
    if (static_cast<int>(point.size()) != p.arity()) {
        throw std::invalid_argument("point length != arity");
    }
    std::complex<double> acc = 0.0;
    for (const auto& [alpha, c] : p.terms()) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < p.arity(); ++i) {
            for (int k = 0; k < alpha[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

Poly substitute_disjoint_relabel(const Poly& p, const std::vector<int>& mapping, int new_arity) {
    if (static_cast<int>(mapping.size()) != p.arity()) {
        throw std::invalid_argument("mapping length != arity");
    }
    std::vector<bool> used(new_arity, false);
    for (int target : mapping) {
        if (target < 1 || target > new_arity) {
            throw std::invalid_argument("relabel target out of range");
        }
        if (used[target - 1]) throw std::invalid_argument("relabel map not injective");
        used[target - 1] = true;
    }
    Poly::TermMap terms;
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e(new_arity, 0);
        for (int i = 0; i < p.arity(); ++i) e[mapping[i] - 1] = alpha[i];
        terms.emplace(MultiIndex(std::move(e)), c);
    }
    return Poly::from_map(new_arity, std::move(terms));
}

Poly substitute_one(const Poly& p, int var_index) {
    if (var_index < 1 || var_index > p.arity()) {
        throw std::invalid_argument("variable index out of range");
    }
    Poly::TermMap terms;
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e = alpha.exponents();
        e[var_index - 1] = 0;
        auto [it, inserted] = terms.try_emplace(MultiIndex(std::move(e)), c);
        if (!inserted) it->second += c;
    }
    return Poly::from_map(p.arity(), std::move(terms));
}

Poly poly_pow(const Poly& p, unsigned s) {
    Poly acc = Poly::constant(p.arity(), GaussianRational(1));
    for (unsigned k = 0; k < s; ++k) acc = acc * p;
    return acc;
}

namespace {

std::string format_var(int index, int base_vars) {
    if (base_vars >= 0 && index > base_vars) {
        return "w" + std::to_string(index - base_vars);
    }
    return "x" + std::to_string(index);
}

std::string format_mono(const MultiIndex& alpha, int base_vars) {
    std::string s;
    for (int i = 0; i < alpha.arity(); ++i) {
        if (alpha[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += format_var(i + 1, base_vars);
        if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
    }
    return s;
}

// Coefficient split into a printable magnitude and an extractable sign.
// Complex coefficients (both parts nonzero) keep their sign inside parens.
struct CoeffText {
    bool negative = false;
    std::string magnitude;  // empty means an implicit 1 before a monomial
};

CoeffText format_coeff(const GaussianRational& c, bool constant_term) {
    CoeffText out;
    if (c.im() == 0) {
        Rational r = c.re();
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        if (constant_term || mag != 1) out.magnitude = to_string(mag);
        return out;
    }
    if (c.re() == 0) {
        Rational r = c.im();
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        out.magnitude = (mag == 1) ? "i" : to_string(mag) + "i";
        return out;
    }
    std::string s = "(" + to_string(c.re());
    Rational im = c.im();
    if (im > 0) {
        s += " + ";
    } else {
        s += " - ";
        im = -im;
    }
    s += (im == 1) ? "i" : to_string(im) + "i";
    s += ")";
    out.magnitude = std::move(s);
    return out;
}

}  // namespace

std::string to_string(const Poly& p, int base_vars) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [alpha, c] = *it;
        std::string mono = format_mono(alpha, base_vars);
        CoeffText coeff = format_coeff(c, mono.empty());
        if (s.empty()) {
            if (coeff.negative) s += "-";
        } else {
            s += coeff.negative ? " - " : " + ";
        }
        s += coeff.magnitude;
        if (!mono.empty()) {
            if (!coeff.magnitude.empty()) s += "*";
            s += mono;
        }
    }
    return s;
}

}  // namespace apolaris
