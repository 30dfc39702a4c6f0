#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "apolaris/rational.hpp"

namespace apolaris {

/// Exponent vector of a monomial. Entries are non-negative; the length is
/// the polynomial arity. Ordering is lexicographic, which is also the
/// canonical term order everywhere in this library.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_) {
            if (v < 0) throw std::invalid_argument("negative exponent in multi-index");
        }
    }
    MultiIndex(std::initializer_list<int> exponents)
        : MultiIndex(std::vector<int>(exponents)) {}

    static MultiIndex zeros(int arity) { return MultiIndex(std::vector<int>(arity, 0)); }

    int arity() const { return static_cast<int>(e_.size()); }

    /// 0-based access.
    int operator[](int i) const { return e_[i]; }

    /// |alpha|, the total degree of the monomial.
    int total() const {
        int s = 0;
        for (int v : e_) s += v;
        return s;
    }

    /// alpha! as an exact integer.
    Integer factorial() const {
        Integer f = 1;
        for (int v : e_) f *= apolaris::factorial(static_cast<unsigned long>(v));
        return f;
    }

    /// Coordinatewise partial order: beta <= *this.
    bool dominates(const MultiIndex& beta) const {
        for (int i = 0; i < arity(); ++i) {
            if (beta.e_[i] > e_[i]) return false;
        }
        return true;
    }

    MultiIndex plus(const MultiIndex& o) const {
        std::vector<int> r(e_);
        for (int i = 0; i < arity(); ++i) r[i] += o.e_[i];
        return MultiIndex(std::move(r));
    }

    /// Requires dominates(o).
    MultiIndex minus(const MultiIndex& o) const {
        std::vector<int> r(e_);
        for (int i = 0; i < arity(); ++i) r[i] -= o.e_[i];
        return MultiIndex(std::move(r));
    }

    /// alpha! / (alpha - beta)!, the coefficient produced by applying the
    /// monomial differential operator z^beta to z^alpha. Requires beta <= alpha.
    Integer falling_factorial(const MultiIndex& beta) const {
        Integer f = 1;
        for (int i = 0; i < arity(); ++i) {
            for (int v = e_[i]; v > e_[i] - beta.e_[i]; --v) f *= v;
        }
        return f;
    }

    const std::vector<int>& exponents() const { return e_; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<int> e_;
};

}  // namespace apolaris
