#include <doctest.h>

#include "apolaris/apolar.hpp"
#include "apolaris/parser.hpp"
#include "generators.hpp"

using namespace apolaris;
using testgen::PolyGen;

namespace {

Poly P(const std::string& text, int arity) { return parse(text, arity); }

}  // namespace

TEST_CASE("apolar inner product on the failure pair") {
    Poly a = P("x1 - 1", 1);
    Poly b = P("x1 + 1", 1);
    CHECK(apolar_inner(a, a) == GaussianRational(2));
    CHECK(apolar_inner(b, b) == GaussianRational(2));
    CHECK(apolar_norm_sq(a) * apolar_norm_sq(b) == 4);
    CHECK(apolar_inner(a * b, a * b) == GaussianRational(3));
}

TEST_CASE("monomials are orthogonal with factorial norms") {
    Poly xa = P("x1^2*x2", 2);
    Poly xb = P("x1*x2^2", 2);
    CHECK(apolar_inner(xa, xb).is_zero());
    CHECK(apolar_inner(xa, xa) == GaussianRational(2));  // (2,1)! = 2
    Poly big = P("x1^3*x2^2", 2);
    CHECK(apolar_inner(big, big) == GaussianRational(12));  // 3! * 2!
    CHECK_THROWS_AS(apolar_inner(xa, P("x1", 1)), std::invalid_argument);
}

TEST_CASE("differential route agrees on the worked examples") {
    CHECK(apolar_inner_via_diff(P("x1^2", 1), P("x1^2", 1)) == GaussianRational(2));
    Poly p = P("x1^2 - 1", 1);
    CHECK(apolar_inner_via_diff(p, p) == GaussianRational(3));
    CHECK(apolar_inner_via_diff(P("i*x1", 1), P("x1", 1)) == GaussianRational::i());
}

TEST_CASE("squared norms") {
    CHECK(apolar_norm_sq(P("x1^2 - 1", 1)) == 3);
    CHECK(apolar_norm_sq(P("0", 2)) == 0);
    CHECK(apolar_norm_sq(P("1 + 2x1 + x1^2", 1)) == 7);  // 1 + 4 + 2
    CHECK(apolar_norm_sq(P("i*x1 - 2", 1)) == 5);
}

TEST_CASE("bombieri normalization") {
    Poly xy = P("x1*x2", 2);
    CHECK(bombieri_inner(xy, xy) == GaussianRational(make_rational(1, 2)));  // 1!1!/2!
    CHECK(bombieri_inner(P("x1^2", 1), P("x1", 1)).is_zero());
    // Termwise alpha!/|alpha|! : both x1^2 and the constant weigh 1.
    Poly p = P("x1^2 - 1", 1);
    CHECK(bombieri_inner(p, p) == GaussianRational(2));
    Poly q = P("x1^3", 1);
    CHECK(bombieri_inner(q, q) == GaussianRational(1));  // 3!/3!
}

TEST_CASE("both inner-product routes agree on random instances") {
    PolyGen gen(424242);
    for (int round = 0; round < 250; ++round) {
        int arity = gen.uniform(1, 3);
        Poly p = gen.poly(arity, 5, 4);
        Poly q = gen.poly(arity, 5, 4);
        CHECK(apolar_inner(p, q) == apolar_inner_via_diff(p, q));
    }
}

TEST_CASE("sesquilinearity and conjugate symmetry") {
    PolyGen gen(777);
    for (int round = 0; round < 150; ++round) {
        int arity = gen.uniform(1, 2);
        Poly p = gen.poly(arity, 3, 3);
        Poly q = gen.poly(arity, 3, 3);
        Poly r = gen.poly(arity, 3, 3);
        GaussianRational a = gen.coeff();
        GaussianRational b = gen.coeff();
        CHECK(apolar_inner(a * p + b * r, q) ==
              a * apolar_inner(p, q) + b * apolar_inner(r, q));
        CHECK(apolar_inner(p, a * q) == a.conj() * apolar_inner(p, q));
        CHECK(apolar_inner(p, q) == apolar_inner(q, p).conj());
    }
}

TEST_CASE("distinct degrees are orthogonal (pythagoras)") {
    PolyGen gen(2024);
    for (int round = 0; round < 150; ++round) {
        int arity = gen.uniform(1, 3);
        Poly p = gen.poly(arity, 4, 4);
        Rational sum = 0;
        int top = p.degree() ? *p.degree() : 0;
        for (int j = 0; j <= top; ++j) sum += apolar_norm_sq(p.homogeneous_component(j));
        CHECK(sum == apolar_norm_sq(p));
    }
}

TEST_CASE("cauchy-schwarz holds exactly") {
    PolyGen gen(31);
    for (int round = 0; round < 200; ++round) {
        int arity = gen.uniform(1, 3);
        Poly p = gen.poly(arity, 4, 3);
        Poly q = gen.poly(arity, 4, 3);
        CHECK(apolar_inner(p, q).norm_sq() <= apolar_norm_sq(p) * apolar_norm_sq(q));
    }
}

TEST_CASE("deleting terms never increases the norm") {
    PolyGen gen(159);
    for (int round = 0; round < 150; ++round) {
        int arity = gen.uniform(1, 2);
        Poly p = gen.nonzero_poly(arity, 4, 5);
        Poly::TermMap kept;
        for (const auto& [alpha, c] : p.terms()) {
            if (gen.uniform(0, 1) == 1) kept.emplace(alpha, c);
        }
        Poly q = Poly::from_map(arity, std::move(kept));
        CHECK(apolar_norm_sq(q) <= apolar_norm_sq(p));
    }
}

TEST_CASE("norm positivity: zero iff the polynomial is zero") {
    PolyGen gen(88);
    for (int round = 0; round < 100; ++round) {
        Poly p = gen.poly(2, 4, 3);
        Rational n = apolar_norm_sq(p);
        CHECK(n >= 0);
        CHECK((n == 0) == p.is_zero());
        GaussianRational self = apolar_inner(p, p);
        CHECK(self.im() == 0);
        CHECK(self.re() == n);
    }
}
