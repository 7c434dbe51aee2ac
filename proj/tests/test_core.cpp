#include "doctest.h"
#include "plq/functions.hpp"
#include "plq/polynomial.hpp"

using namespace plq;

TEST_CASE("scalar arithmetic is exact in Q") {
    Scalar a(1, 3), b(1, 6);
    CHECK(a + b == Scalar(1, 2));
    CHECK(a * b == Scalar(1, 18));
    CHECK(a / b == Scalar(2));
    CHECK((a - a).is_zero());
    CHECK(Scalar(-3, 9).str() == "-1/3");
}

TEST_CASE("scalar arithmetic in Q(sqrt(2))") {
    Scalar r2(Rat(0), Rat(1), 2);  // sqrt(2)
    CHECK((r2 * r2) == Scalar(2));
    Scalar x = Scalar(1) + r2;     // 1 + sqrt(2)
    Scalar inv = Scalar(1) / x;    // sqrt(2) - 1
    CHECK(inv == r2 - Scalar(1));
    CHECK(x.sign() == 1);
    CHECK((Scalar(1) - r2).sign() == -1);
    CHECK((r2 - Scalar(141421, 100000)).sign() > 0);
    CHECK((r2 - Scalar(141422, 100000)).sign() < 0);
}

TEST_CASE("scalar parse/print round trip") {
    for (const char* s : {"3", "-5/7", "0", "1/2+3/4*sqrt(5)", "-2-1/3*sqrt(7)"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("1/2 + 3/4*sqrt(5)").str() == "1/2+3/4*sqrt(5)");
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("sqrt_in_field") {
    CHECK(*Scalar::sqrt_in_field(Scalar(9, 4)) == Scalar(3, 2));
    auto r = Scalar::sqrt_in_field(Scalar(8));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar(8));
    CHECK(r->field_d() == 2);
    CHECK(!Scalar::sqrt_in_field(Scalar(-1)).has_value());
    // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    Scalar t(Rat(3), Rat(2), 2);
    auto s = Scalar::sqrt_in_field(t);
    REQUIRE(s.has_value());
    CHECK(*s * *s == t);
}

TEST_CASE("eval examples") {
    QuadFn xy{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(xy.eval({Scalar(-5), Scalar(-4)}) == Scalar(20));

    // Table-style rational piece: (155x-5y+4xy+35x^2+5y^2-100)/(7x-y+40) at (1,3) = 3
    RationalFn r12;
    r12.num = {Scalar(35), Scalar(4), Scalar(5), Scalar(155), Scalar(-5), Scalar(-100)};
    r12.den = {Scalar(7), Scalar(-1), Scalar(40)};
    CHECK(r12.num.eval({Scalar(1), Scalar(3)}) == Scalar(132));
    CHECK(r12.den.eval({Scalar(1), Scalar(3)}) == Scalar(44));
    CHECK(r12.eval({Scalar(1), Scalar(3)}) == Scalar(3));

    LinFn l{Scalar(-4), Scalar(-5), Scalar(-20)};
    CHECK(l.eval({Scalar(-5), Scalar(5)}) == Scalar(-25));

    // Denominator vanishes away from the continuity vertex
    r12.continuity = {{Pt{Scalar(-5), Scalar(5)}, Scalar(-25)}};
    CHECK(r12.eval({Scalar(-5), Scalar(5)}) == Scalar(-25));
    CHECK_THROWS_AS(r12.eval({Scalar(0), Scalar(40)}), DivisionByZero);
}

TEST_CASE("discriminant and classification") {
    QuadFn xy{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(discriminant(xy) == Scalar(1));
    CHECK(classify_form(xy) == FormClass::indefinite);

    QuadFn sq{Scalar(1), Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(classify_form(sq) == FormClass::convex);

    QuadFn nx2{Scalar(-2), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(classify_form(nx2) == FormClass::concave);

    // Table 1 s124 quadratic part: (1/28)s1^2 + (1/2)s1s2 + (7/4)s2^2
    QuadFn s124{Scalar(1, 28), Scalar(1, 2), Scalar(7, 4), Scalar(2, 7), Scalar(-2), Scalar(4, 7)};
    CHECK(discriminant(s124).is_zero());

    // division-example f2: u^2/8 + uv/2 + v^2/2 + ...
    QuadFn f2{Scalar(1, 8), Scalar(1, 2), Scalar(1, 2), Scalar(1), Scalar(-2), Scalar(2)};
    CHECK(discriminant(f2).is_zero());

    // discriminant invariant under adding an affine part
    LinFn l{Scalar(3), Scalar(-7), Scalar(11)};
    CHECK(discriminant(s124 + l) == discriminant(s124));
}

TEST_CASE("normalize_rational reproduces table pieces") {
    RationalFn r12;
    r12.num = {Scalar(35), Scalar(4), Scalar(5), Scalar(155), Scalar(-5), Scalar(-100)};
    r12.den = {Scalar(7), Scalar(-1), Scalar(40)};
    RationalFn n = normalize_rational(r12);
    REQUIRE(n.psi.has_value());
    // Spot check the identity at a few points off the zero line.
    for (long xv : {0L, 1L, -3L}) {
        for (long yv : {0L, 2L, 5L}) {
            Pt p{Scalar(xv), Scalar(yv)};
            Scalar lhs = r12.num.eval(p) / r12.den.eval(p);
            Scalar x1 = n.psi->xi1.eval(p), x2 = n.psi->xi2.eval(p), x0 = n.psi->xi0.eval(p);
            CHECK(lhs == x1 * x1 / x2 + x0);
        }
    }

    // Table 3 r12
    RationalFn t3;
    t3.num = {Scalar(10), Scalar(4), Scalar(5), Scalar(30), Scalar(-5), Scalar(-100)};
    t3.den = {Scalar(2), Scalar(-1), Scalar(15)};
    CHECK_NOTHROW(normalize_rational(t3));

    // x^2/(x+1): xi0 = 0
    RationalFn simple;
    simple.num = {Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    simple.den = {Scalar(1), Scalar(0), Scalar(1)};
    RationalFn ns = normalize_rational(simple);
    CHECK(ns.psi->xi0.is_zero());

    // xy/(x+1) is not a square on the line x = -1: no psi form
    RationalFn bad;
    bad.num = {Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    bad.den = {Scalar(1), Scalar(0), Scalar(1)};
    CHECK_THROWS_AS(normalize_rational(bad), NoPsiForm);
}

TEST_CASE("polynomial root isolation") {
    // (t-1)(t-2)(t+3) = t^3 - 7t + 6
    UniPoly p({Scalar(6), Scalar(-7), Scalar(0), Scalar(1)});
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].lo <= Rat(-3));
    CHECK(roots[0].hi >= Rat(-3));
    // t^2 - 2: irrational roots
    UniPoly q({Scalar(-2), Scalar(0), Scalar(1)});
    auto r2 = isolate_roots(q);
    REQUIRE(r2.size() == 2);
    CHECK(r2[1].lo < Rat(15, 10));
    CHECK(r2[1].hi > Rat(14, 10));
    // no real roots
    UniPoly n({Scalar(1), Scalar(0), Scalar(1)});
    CHECK(isolate_roots(n).empty());
}

TEST_CASE("resultants of conics") {
    // y - x^2 and y - x: intersections at x = 0, 1
    QuadFn par{Scalar(-1), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    QuadFn line{Scalar(0), Scalar(0), Scalar(0), Scalar(-1), Scalar(1), Scalar(0)};
    UniPoly r = resultant_y(par, line);
    CHECK(r.eval(Scalar(0)).is_zero());
    CHECK(r.eval(Scalar(1)).is_zero());
    CHECK(!r.eval(Scalar(2)).is_zero());
}

TEST_CASE("field closure under random rational ops") {
    // Construction-style test: products/sums/quotients stay in the field.
    Scalar x(Rat(3, 7), Rat(2, 5), 3);
    Scalar y(Rat(-1, 2), Rat(4, 9), 3);
    Scalar z = (x * y + x / y - y) * x;
    CHECK(z.field_d() == 3);
    CHECK_THROWS_AS(Scalar(Rat(1), Rat(1), 2) + Scalar(Rat(1), Rat(1), 3), UnsupportedField);
}
