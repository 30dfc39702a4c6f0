#include <doctest.h>

#include <algorithm>
#include <complex>
#include <set>

#include "apolaris/parser.hpp"
#include "apolaris/poly.hpp"
#include "generators.hpp"

using namespace apolaris;
using testgen::PolyGen;

namespace {

Poly P(const std::string& text, int arity) { return parse(text, arity); }

}  // namespace

TEST_CASE("multi-index basics") {
    MultiIndex a{2, 3, 0};
    CHECK(a.total() == 5);
    CHECK(a.factorial() == 12);  // 2! * 3! * 0!
    CHECK(a.dominates(MultiIndex{1, 3, 0}));
    CHECK_FALSE(a.dominates(MultiIndex{3, 0, 0}));
    CHECK(a.falling_factorial(MultiIndex{1, 2, 0}) == 12);  // 2 * (3*2)
    CHECK(MultiIndex{2, 0, 0} > MultiIndex{1, 9, 9});       // lexicographic
    CHECK_THROWS_AS(MultiIndex{-1}, std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic stays canonical") {
    Rational half = make_rational(2, 4);
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);
    Rational neg = make_rational(1, -2);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    GaussianRational c(make_rational(1, 2), make_rational(-3, 4));
    CHECK(c.conj().conj() == c);
    CHECK(c.norm_sq() == make_rational(13, 16));  // 1/4 + 9/16
    CHECK(c.norm_sq() >= 0);
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(to_string(c) == "(1/2 - 3/4 i)");
    CHECK(to_string(GaussianRational(make_rational(5, 3))) == "5/3");
}

TEST_CASE("parse: grammar examples") {
    Poly p = P("x1^2 - 1", 1);
    CHECK(p.coeff(MultiIndex{2}) == GaussianRational(1));
    CHECK(p.coeff(MultiIndex{0}) == GaussianRational(-1));
    CHECK(p.term_count() == 2);

    CHECK(P("0", 3).is_zero());
    CHECK(P("0", 3).term_count() == 0);

    Poly q = P("(1/2 + i)*x1*x2^2", 2);
    CHECK(q.term_count() == 1);
    CHECK(q.coeff(MultiIndex{1, 2}) == GaussianRational(make_rational(1, 2), Rational(1)));
}

TEST_CASE("parse: forms and sugar") {
    CHECK(P("2x1", 1) == P("2*x1", 1));
    CHECK(P("x1x2", 2) == P("x1*x2", 2));
    CHECK(P("x1^2x2", 2) == P("x1^2*x2", 2));
    CHECK(P("x1*x1", 1) == P("x1^2", 1));
    CHECK(P("i*x1", 1) == P("(0 + 1i)*x1", 1));
    CHECK(P("3/4i*x1", 1) == P("(0 + 3/4i)*x1", 1));
    CHECK(P("(1/2 - i)*x1", 1) - P("1/2*x1", 1) == P("-i*x1", 1));
    CHECK(P("-x1 - 1", 1) == -P("x1 + 1", 1));
    CHECK(P("x1 + x1", 1) == P("2x1", 1));
    CHECK(P("x1 - x1", 1).is_zero());
    CHECK(P("x1^0", 1) == P("1", 1));
    // w-variables sit after the largest x-index of the same text.
    CHECK(P("x1^2 - w1^2", 2) == P("x1^2 - x2^2", 2));
    CHECK(P("w1*w2", 2) == P("x1*x2", 2));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(P("x1 +", 1), parse_error);
    try {
        P("x1 +", 1);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
    try {
        P("1/0", 1);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(P("x2", 1), parse_error);       // out of range
    CHECK_THROWS_AS(P("x0", 1), parse_error);       // indices are 1-based
    CHECK_THROWS_AS(P("x1 + w1", 1), parse_error);  // w1 maps past the arity
    CHECK_THROWS_AS(P("x1 & 2", 1), parse_error);   // stray character
    CHECK_THROWS_AS(P("2*", 1), parse_error);       // dangling star
    CHECK_THROWS_AS(P("x1^", 1), parse_error);      // dangling caret
    CHECK_THROWS_AS(P("(1 + 2)", 1), parse_error);  // imaginary part needs i
    CHECK_THROWS_AS(parse("x1", 0), std::invalid_argument);
}

TEST_CASE("canonical printing") {
    CHECK(to_string(P("x1^2 - 1", 1)) == "x1^2 - 1");
    CHECK(to_string(P("x1*x2^2 + x1", 2)) == "x1*x2^2 + x1");
    CHECK(to_string(P("(1/2 + i)*x1*x2^2", 2)) == "(1/2 + i)*x1*x2^2");
    CHECK(to_string(P("0", 2)) == "0");
    CHECK(to_string(P("-x1 - 1", 1)) == "-x1 - 1");
    CHECK(to_string(P("3/4i*x1 - i", 1)) == "3/4i*x1 - i");
    // Fresh-variable printing for homogenization output.
    CHECK(to_string(P("x1^2 - x2^2", 2), 1) == "x1^2 - w1^2");
}

TEST_CASE("add and subtract") {
    CHECK(P("x1 - 1", 1) + P("x1 + 1", 1) == P("2x1", 1));
    Poly p = P("x1^2 + 2x1 - 5", 1);
    CHECK(p + Poly(1) == p);
    CHECK(P("x1^2", 1) + P("-x1^2 + x1", 1) == P("x1", 1));
    CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), std::invalid_argument);
}

TEST_CASE("multiplication") {
    CHECK(P("x1 - 1", 1) * P("x1 + 1", 1) == P("x1^2 - 1", 1));
    CHECK(P("1 + 1/3*x1", 1) * P("1 - 1/3*x1", 1) == P("1 - 1/9*x1^2", 1));
    Poly p = P("x1^3 - 2x1 + 7", 1);
    CHECK(p * P("1", 1) == p);
    CHECK_THROWS_AS(P("x1", 1) * P("x1", 2), std::invalid_argument);
}

TEST_CASE("total degree") {
    CHECK(P("x1^2 - 1", 1).total_degree() == 2);
    CHECK(P("5", 1).total_degree() == 0);
    CHECK(P("x1*x2^2 + x1", 2).total_degree() == 3);
    CHECK_THROWS_AS(P("0", 1).total_degree(), std::domain_error);
    CHECK_FALSE(P("0", 1).degree().has_value());
}

TEST_CASE("homogeneous components") {
    Poly p = P("x1^2 - 1", 1);
    CHECK(p.homogeneous_component(2) == P("x1^2", 1));
    CHECK(p.homogeneous_component(1).is_zero());
    Poly cube = P("x1 + 1", 1) * P("x1 + 1", 1) * P("x1 + 1", 1);
    CHECK(cube.homogeneous_component(2) == P("3x1^2", 1));
    CHECK(P("x1^2 + x2^2", 2).is_homogeneous());
    CHECK_FALSE(P("x1^2 + 1", 1).is_homogeneous());
    CHECK(P("0", 1).is_homogeneous());
}

TEST_CASE("conjugation") {
    CHECK(P("i*x1 + 1", 1).conjugate() == P("-i*x1 + 1", 1));
    Poly real = P("x1^2 - 3/2*x1", 1);
    CHECK(real.conjugate() == real);
    CHECK(P("(2 + 3i)*x1^2", 1).conjugate() == P("(2 - 3i)*x1^2", 1));
    Poly p = P("(1 - 2i)*x1 + i", 1);
    CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("differential operator application") {
    CHECK(apply_diff(P("x1", 1), P("x1^2", 1)) == P("2x1", 1));
    CHECK(apply_diff(P("x1^2", 1), P("x1", 1)).is_zero());
    CHECK(apply_diff(P("x1^2", 1), P("x1^3 + x1^2", 1)) == P("6x1 + 2", 1));
    CHECK_THROWS_AS(apply_diff(P("x1", 1), P("x1", 2)), std::invalid_argument);
}

TEST_CASE("evaluation") {
    using std::complex;
    CHECK(evaluate(P("x1^2 - 1", 1), {complex<double>(2, 0)}) == complex<double>(3, 0));
    CHECK(evaluate(P("x1^2 - 5/2", 1), {complex<double>(0, 0)}) == complex<double>(-2.5, 0));
    complex<double> v = evaluate(P("x1*x2", 2), {{1, 1}, {1, -1}});
    CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(evaluate(P("x1", 1), {{1, 0}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("variable relabeling") {
    CHECK(substitute_disjoint_relabel(P("x1^2 - 1", 1), {2}, 2) == P("x2^2 - 1", 2));
    Poly p = P("x1*x2 + x2^2", 2);
    CHECK(substitute_disjoint_relabel(p, {1, 2}, 2) == p);
    CHECK(substitute_disjoint_relabel(P("x1*x2", 2), {3, 1}, 3) == P("x1*x3", 3));
    CHECK_THROWS_AS(substitute_disjoint_relabel(p, {1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(substitute_disjoint_relabel(p, {1, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(substitute_disjoint_relabel(p, {1}, 2), std::invalid_argument);
}

TEST_CASE("substituting one for a variable") {
    CHECK(substitute_one(P("x1^2*x2 + x2^2", 2), 2) == P("x1^2 + 1", 2));
    CHECK(substitute_one(P("x1 - x1*x2", 2), 2).is_zero());
}

TEST_CASE("ring axioms on random instances") {
    PolyGen gen(20240811);
    for (int round = 0; round < 150; ++round) {
        int arity = gen.uniform(1, 3);
        Poly a = gen.poly(arity, 3, 3);
        Poly b = gen.poly(arity, 3, 3);
        Poly c = gen.poly(arity, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("degree of a product adds (no zero divisors)") {
    PolyGen gen(7);
    for (int round = 0; round < 300; ++round) {
        int arity = gen.uniform(1, 3);
        Poly a = gen.nonzero_poly(arity, 3, 3);
        Poly b = gen.nonzero_poly(arity, 3, 3);
        Poly ab = a * b;
        REQUIRE_FALSE(ab.is_zero());
        CHECK(ab.total_degree() == a.total_degree() + b.total_degree());
    }
}

TEST_CASE("homogeneous components reassemble the polynomial") {
    PolyGen gen(99);
    for (int round = 0; round < 200; ++round) {
        int arity = gen.uniform(1, 3);
        Poly p = gen.poly(arity, 4, 4);
        Poly sum(arity);
        int top = p.degree() ? *p.degree() : 0;
        for (int j = 0; j <= top; ++j) sum = sum + p.homogeneous_component(j);
        CHECK(sum == p);
    }
}

TEST_CASE("differential operators compose multiplicatively") {
    PolyGen gen(1234);
    for (int round = 0; round < 200; ++round) {
        int arity = gen.uniform(1, 2);
        Poly q = gen.poly(arity, 2, 2);
        Poly r = gen.poly(arity, 2, 2);
        Poly p = gen.poly(arity, 4, 3);
        CHECK(apply_diff(q, apply_diff(r, p)) == apply_diff(q * r, p));
    }
}

TEST_CASE("relabeling preserves exponent multisets and coefficients") {
    PolyGen gen(55);
    for (int round = 0; round < 100; ++round) {
        Poly p = gen.poly(2, 3, 3);
        Poly moved = substitute_disjoint_relabel(p, {3, 1}, 3);
        CHECK(moved.term_count() == p.term_count());
        auto signature = [](const Poly& poly) {
            std::multiset<std::pair<std::vector<int>, std::string>> sig;
            for (const auto& [alpha, c] : poly.terms()) {
                std::vector<int> sorted;
                for (int v = 0; v < alpha.arity(); ++v) {
                    if (alpha[v] > 0) sorted.push_back(alpha[v]);
                }
                std::sort(sorted.begin(), sorted.end());
                sig.emplace(std::move(sorted), to_string(c));
            }
            return sig;
        };
        CHECK(signature(p) == signature(moved));
    }
}

TEST_CASE("parse of canonical print is the identity") {
    PolyGen gen(31337);
    for (int round = 0; round < 300; ++round) {
        int arity = gen.uniform(1, 3);
        Poly p = gen.poly(arity, 4, 4);
        std::string text = to_string(p);
        CHECK(parse(text, arity) == p);
        CHECK(to_string(parse(text, arity)) == text);
    }
}
