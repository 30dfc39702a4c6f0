#include "apolaris/homogenize.hpp"

#include <stdexcept>

namespace apolaris {

namespace {

int nonzero_degree(const Poly& p, const char* op) {
    auto d = p.degree();
    if (!d) throw std::domain_error(std::string(op) + " of the zero polynomial");
    return *d;
}

}  // namespace

Poly homogenize_one_var(const Poly& p) {
    int k = nonzero_degree(p, "homogenization");
    int d = p.arity();
    Poly::TermMap terms;
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e = alpha.exponents();
        e.push_back(k - alpha.total());
        terms.emplace(MultiIndex(std::move(e)), c);
    }
    return Poly::from_map(d + 1, std::move(terms));
}

Poly homogenize_even_two_var(const Poly& p) {
    int m = nonzero_degree(p, "homogenization");
    if (m % 2 != 0) throw std::invalid_argument("total degree must be even");
    int d = p.arity();
    Poly::TermMap terms;
    for (const auto& [alpha, c] : p.terms()) {
        for (int i = 0; i < d; ++i) {
            if (alpha[i] % 2 != 0) throw std::invalid_argument("odd exponent in even-form polynomial");
        }
        if (alpha.total() % 2 != 0) throw std::invalid_argument("odd-degree term in even-form polynomial");
        int level = (m - alpha.total()) / 2;
        std::vector<int> e = alpha.exponents();
        e.push_back(level);
        e.push_back(level);
        terms.emplace(MultiIndex(std::move(e)), c);
    }
    return Poly::from_map(d + 2, std::move(terms));
}

Poly homogenize_many_var(const Poly& p, const HomogenizationPattern& pattern) {
    int k = nonzero_degree(p, "homogenization");
    if (static_cast<int>(pattern.levels.size()) != k) {
        throw std::invalid_argument("pattern length must equal the total degree");
    }
    for (int v : pattern.levels) {
        if (v < 1) throw std::invalid_argument("pattern entries are 1-based fresh-variable ids");
    }
    int d = p.arity();
    int fresh = pattern.fresh_count();
    Poly::TermMap terms;
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e = alpha.exponents();
        e.resize(d + fresh, 0);
        // Component of degree |alpha| sits at level k - |alpha| and picks up
        // the first k - |alpha| pattern variables.
        int level = k - alpha.total();
        for (int j = 0; j < level; ++j) e[d + pattern.levels[j] - 1] += 1;
        terms.emplace(MultiIndex(std::move(e)), c);
    }
    return Poly::from_map(d + fresh, std::move(terms));
}

}  // namespace apolaris
