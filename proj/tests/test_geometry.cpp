#include "doctest.h"
#include "plq/polytope.hpp"
#include "plq/region.hpp"

using namespace plq;

namespace {
Pt pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
Polytope hull(std::initializer_list<Pt> pts) { return Polytope::hull_and_orient(pts); }
}  // namespace

TEST_CASE("hull_and_orient") {
    Polytope d1 = hull({pt(-5, -4), pt(0, -4), pt(1, 3), pt(-5, 5)});
    CHECK(d1.vertices().size() == 4);
    CHECK(d1.halfplanes().size() == 4);
    CHECK(d1.dim() == 2);
    CHECK(d1.contains(pt(-2, 0)));
    CHECK(d1.strictly_contains(pt(-2, 0)));
    CHECK(!d1.contains(pt(10, 10)));
    // ccw orientation
    CHECK(d1.area2().sign() > 0);

    Polytope seg = hull({pt(0, 0), pt(1, 0), pt(0, 0)});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.contains(pt(0, 0)));
    CHECK(seg.contains({Scalar(1, 2), Scalar(0)}));
    CHECK(!seg.contains(pt(2, 0)));

    Polytope tri = hull({pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 2)});
    CHECK(tri.vertices().size() == 3);  // collinear middle point dropped

    Polytope point = hull({pt(3, 4)});
    CHECK(point.dim() == 0);
    CHECK(point.contains(pt(3, 4)));
    CHECK(!point.contains(pt(3, 5)));
}

TEST_CASE("validate_subdivision accepts the appendix pair") {
    Polytope d1 = hull({pt(-5, -4), pt(0, -4), pt(1, 3), pt(-5, 5)});
    Polytope d2 = hull({pt(0, -4), pt(2, 0), pt(2, 1), pt(1, 3)});
    CHECK_NOTHROW(validate_subdivision({d1, d2}));
    CHECK_NOTHROW(validate_subdivision({d1}));
}

TEST_CASE("validate_subdivision rejects degenerate cases") {
    Polytope sq = hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    // 2-D overlap
    Polytope shifted =
        hull({{Scalar(1, 2), Scalar(0)}, {Scalar(3, 2), Scalar(0)}, {Scalar(3, 2), Scalar(1)},
              {Scalar(1, 2), Scalar(1)}});
    CHECK_THROWS_AS(validate_subdivision({sq, shifted}), InvalidSubdivision);
    // partial edge overlap
    Polytope tall = hull({pt(1, 0), pt(2, 0), pt(2, 3), pt(1, 3)});
    CHECK_THROWS_AS(validate_subdivision({sq, tall}), InvalidSubdivision);
    // dangling vertex on edge interior
    Polytope spike = hull({{Scalar(1, 2), Scalar(1)}, pt(0, 2), pt(1, 2)});
    CHECK_THROWS_AS(validate_subdivision({sq, spike}), InvalidSubdivision);
    // shared full edge is fine
    Polytope right = hull({pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)});
    CHECK_NOTHROW(validate_subdivision({sq, right}));
    // shared vertex is fine
    Polytope corner = hull({pt(1, 1), pt(2, 1), pt(2, 2)});
    CHECK_NOTHROW(validate_subdivision({sq, corner}));
}

TEST_CASE("interior point of polyhedral regions") {
    // contradictory halfplanes: x <= 0, x >= 1
    ParabolicRegion empty({ParabolicInequality::from_linear({Scalar(1), Scalar(0), Scalar(0)}),
                           ParabolicInequality::from_linear({Scalar(-1), Scalar(0), Scalar(1)})});
    CHECK(!interior_point(empty).has_value());

    // a parabola as a measure-zero set: y - x^2 <= 0 and >= 0
    QuadFn par{Scalar(-1), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    ParabolicRegion thin({ParabolicInequality::from(par), ParabolicInequality::from(-par)});
    CHECK(!interior_point(thin).has_value());

    // nonempty: inside the parabola y >= x^2, below y = 4
    ParabolicRegion cup({ParabolicInequality::from(par),
                         ParabolicInequality::from_linear({Scalar(0), Scalar(1), Scalar(-4)})});
    auto w = interior_point(cup);
    REQUIRE(w.has_value());
    CHECK(cup.strictly_contains(*w));
}

TEST_CASE("region intersection and idempotence") {
    ParabolicRegion left({ParabolicInequality::from_linear({Scalar(1), Scalar(0), Scalar(0)})});
    ParabolicRegion right({ParabolicInequality::from_linear({Scalar(-1), Scalar(0), Scalar(1)})});
    CHECK(!intersect_regions(left, right).has_value());

    auto self = intersect_regions(left, left);
    REQUIRE(self.has_value());
    CHECK(self->inequalities().size() == 1);

    ParabolicRegion band({ParabolicInequality::from_linear({Scalar(0), Scalar(1), Scalar(-2)}),
                          ParabolicInequality::from_linear({Scalar(0), Scalar(-1), Scalar(0)})});
    auto both = intersect_regions(left, band);
    REQUIRE(both.has_value());
    CHECK(both->witness().has_value());
    CHECK(both->strictly_contains(*both->witness()));
    // commutative up to ordering
    auto flip = intersect_regions(band, left);
    REQUIRE(flip.has_value());
    CHECK(flip->key() == both->key());
}

TEST_CASE("merge_complementary") {
    auto xle0 = ParabolicInequality::from_linear({Scalar(1), Scalar(0), Scalar(0)});
    auto xge0 = ParabolicInequality::from_linear({Scalar(-1), Scalar(0), Scalar(0)});
    auto yle1 = ParabolicInequality::from_linear({Scalar(0), Scalar(1), Scalar(-1)});
    ParabolicRegion a({xle0, yle1});
    ParabolicRegion b({xge0, yle1});
    auto m = merge_complementary(a, b);
    REQUIRE(m.has_value());
    CHECK(m->inequalities().size() == 1);
    CHECK(m->inequalities()[0] == yle1);

    // identical regions: not a complementary pair
    CHECK(!merge_complementary(a, a).has_value());

    // differ in more than one constraint
    ParabolicRegion c({xge0, ParabolicInequality::from_linear({Scalar(0), Scalar(1), Scalar(-2)})});
    CHECK(!merge_complementary(a, c).has_value());
}

TEST_CASE("prune_redundant") {
    auto xle1 = ParabolicInequality::from_linear({Scalar(1), Scalar(0), Scalar(-1)});
    auto xle2 = ParabolicInequality::from_linear({Scalar(1), Scalar(0), Scalar(-2)});
    ParabolicRegion r({xle1, xle2});
    ParabolicRegion p = prune_redundant(r);
    CHECK(p.inequalities().size() == 1);
    CHECK(p.inequalities()[0] == xle1);
}

TEST_CASE("witness invariants") {
    // Example-division region B: five inequalities, nonempty interior.
    QuadFn split{Scalar(1), Scalar(4), Scalar(4), Scalar(48), Scalar(-56), Scalar(-184)};
    ParabolicRegion b({ParabolicInequality::from_linear({Scalar(-1), Scalar(-7), Scalar(-4)}),
                       ParabolicInequality::from_linear({Scalar(1), Scalar(7), Scalar(-10)}),
                       ParabolicInequality::from_linear({Scalar(-1), Scalar(-2), Scalar(-4)}),
                       ParabolicInequality::from_linear({Scalar(1), Scalar(2), Scalar(-4)}),
                       ParabolicInequality::from(split)});
    auto w = interior_point(b);
    REQUIRE(w.has_value());
    CHECK(b.strictly_contains(*w));
}
