#include "apolaris/apolar.hpp"

#include <stdexcept>

namespace apolaris {

namespace {

void require_same_arity(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
}

}  // namespace

GaussianRational apolar_inner(const Poly& p, const Poly& q) {
    require_same_arity(p, q);
    GaussianRational acc;
    if (p.is_zero() || q.is_zero()) return acc;
    // Walk the smaller support, probing the other.
    const Poly& small = p.term_count() <= q.term_count() ? p : q;
    const Poly& large = p.term_count() <= q.term_count() ? q : p;
    for (const auto& [alpha, c] : small.terms()) {
        auto it = large.terms().find(alpha);
        if (it == large.terms().end()) continue;
        const GaussianRational& cp = (&small == &p) ? c : it->second;
        const GaussianRational& cq = (&small == &p) ? it->second : c;
        acc += cp * cq.conj() * Rational(alpha.factorial());
    }
    return acc;
}

GaussianRational apolar_inner_via_diff(const Poly& p, const Poly& q) {
    require_same_arity(p, q);
    Poly applied = apply_diff(q.conjugate(), p);
    return applied.coeff(MultiIndex::zeros(p.arity()));
}

Rational apolar_norm_sq(const Poly& p) {
    Rational acc = 0;
    for (const auto& [alpha, c] : p.terms()) {
        acc += c.norm_sq() * Rational(alpha.factorial());
    }
    return acc;
}

GaussianRational bombieri_inner(const Poly& p, const Poly& q) {
    require_same_arity(p, q);
    GaussianRational acc;
    if (p.is_zero() || q.is_zero()) return acc;
    const Poly& small = p.term_count() <= q.term_count() ? p : q;
    const Poly& large = p.term_count() <= q.term_count() ? q : p;
    for (const auto& [alpha, c] : small.terms()) {
        auto it = large.terms().find(alpha);
        if (it == large.terms().end()) continue;
        const GaussianRational& cp = (&small == &p) ? c : it->second;
        const GaussianRational& cq = (&small == &p) ? it->second : c;
        Rational weight = make_rational(alpha.factorial(),
                                        factorial(static_cast<unsigned long>(alpha.total())));
        acc += cp * cq.conj() * weight;
    }
    return acc;
}

}  // namespace apolaris
