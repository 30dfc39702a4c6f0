#pragma once

#include <vector>

#include "apolaris/poly.hpp"

namespace apolaris {

/// Assignment of fresh variables to homogenization levels. Entry j (0-based)
/// names the fresh variable (1-based, so the output variable index is
/// arity + entry) attached to level j+1; repetitions are allowed. Length must
/// equal the degree of the polynomial being homogenized.
struct HomogenizationPattern {
    std::vector<int> levels;

    static HomogenizationPattern one_var(int degree) {
        return {std::vector<int>(degree, 1)};
    }
    /// 1, 2, 1, 2, ... — the pattern behind the even-exponent construction.
    static HomogenizationPattern alternating_two(int degree) {
        std::vector<int> v(degree);
        for (int j = 0; j < degree; ++j) v[j] = 1 + (j % 2);
        return {std::move(v)};
    }

    int fresh_count() const {
        int m = 0;
        for (int v : levels) m = std::max(m, v);
        return m;
    }
};

/// P_k + w*P_{k-1} + ... + w^k*P_0 on one fresh variable; homogeneous of
/// degree k = deg P, arity d+1. Setting w = 1 recovers P. Constants are
/// returned unchanged except for the added variable slot.
Poly homogenize_one_var(const Poly& p);

/// For polynomials whose every exponent is even (hence even total degree m):
/// P_m + ... + (w1*w2)^{(m-2)/2}*P_2 + (w1*w2)^{m/2}*P_0, arity d+2.
Poly homogenize_even_two_var(const Poly& p);

/// P_k + w_{a1}*P_{k-1} + w_{a1}*w_{a2}*P_{k-2} + ... with the pattern's
/// variables; level j multiplies component P_{k-j} by the product of the
/// first j pattern entries. Output arity is d + pattern.fresh_count().
Poly homogenize_many_var(const Poly& p, const HomogenizationPattern& pattern);

}  // namespace apolaris
