#include <gtest/gtest.h>

#include "polystat/geometry.hpp"

namespace polystat {
namespace {

Vec3 v3(long long x, long long y, long long z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

// ---------------------------------------------------------------------------
// Rational scalars
// ---------------------------------------------------------------------------

TEST(Rational, CanonicalForm) {
  Rat r(Int(3), Int(6));
  EXPECT_EQ(r.num(), 1);
  EXPECT_EQ(r.den(), 2);
  Rat s(Int(-4), Int(-8));
  EXPECT_EQ(s.num(), 1);
  EXPECT_EQ(s.den(), 2);
  Rat t(Int(5), Int(-10));
  EXPECT_EQ(t.num(), -1);
  EXPECT_EQ(t.den(), 2);
  EXPECT_EQ(t.sign(), -1);
}

TEST(Rational, ArithmeticIsExact) {
  Rat third(Int(1), Int(3));
  Rat sum = third + third + third;
  EXPECT_EQ(sum, Rat(1));
  EXPECT_TRUE((third * Rat(3)).is_integer());
  EXPECT_EQ(Rat(7) / Rat(2), Rat(Int(7), Int(2)));
  EXPECT_THROW(Rat(1) / Rat(0), Error);
  EXPECT_THROW(Rat(Int(1), Int(0)), Error);
}

TEST(Rational, ParseAndFormatRoundTrip) {
  EXPECT_EQ(Rat::parse("42").str(), "42");
  EXPECT_EQ(Rat::parse("-42").str(), "-42");
  EXPECT_EQ(Rat::parse("3/6").str(), "1/2");
  EXPECT_EQ(Rat::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rat::parse("0/9").str(), "0");
  EXPECT_THROW(Rat::parse(""), Error);
  EXPECT_THROW(Rat::parse("1/"), Error);
  EXPECT_THROW(Rat::parse("/2"), Error);
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("1.5"), Error);
  EXPECT_THROW(Rat::parse(" 1"), Error);
}

TEST(Rational, PowersOfTwo) {
  EXPECT_EQ(Rat::pow2(0), Rat(1));
  EXPECT_EQ(Rat::pow2(10), Rat(1024));
  EXPECT_EQ(Rat::pow2(-3), Rat(Int(1), Int(8)));
}

// ---------------------------------------------------------------------------
// Angle classification
// ---------------------------------------------------------------------------

TEST(AngleSign, AxisAlignedCases) {
  Vec3 o = v3(0, 0, 0);
  EXPECT_EQ(angle_sign(o, v3(1, 0, 0), v3(0, 1, 0)), AngleClass::Right);
  EXPECT_EQ(angle_sign(o, v3(1, 0, 0), v3(1, 1, 0)), AngleClass::Acute);
  EXPECT_EQ(angle_sign(o, v3(1, 0, 0), v3(-1, 1, 0)), AngleClass::Obtuse);
}

TEST(AngleSign, RejectsCoincidentApex) {
  EXPECT_THROW(angle_sign(v3(1, 1, 1), v3(1, 1, 1), v3(0, 0, 0)), Error);
  EXPECT_THROW(angle_sign(v3(1, 1, 1), v3(0, 0, 0), v3(1, 1, 1)), Error);
}

TEST(AngleSign, SymmetricAndScaleInvariant) {
  Vec3 apex = v3(2, -3, 5);
  Vec3 p = v3(7, 1, -2);
  Vec3 q = v3(-4, 9, 3);
  EXPECT_EQ(angle_sign(apex, p, q), angle_sign(apex, q, p));
  Rat s(Int(7), Int(3));
  Vec3 p_scaled = apex + s * (p - apex);
  EXPECT_EQ(angle_sign(apex, p, q), angle_sign(apex, p_scaled, q));
}

// ---------------------------------------------------------------------------
// Line and plane intersections
// ---------------------------------------------------------------------------

TEST(LinePlane, MidpointCut) {
  Plane z1{v3(0, 0, 1), Rat(1)};
  LinePlaneCut cut = intersect_line_plane(v3(0, 0, 0), v3(0, 0, 2), z1);
  EXPECT_EQ(cut.point, v3(0, 0, 1));
  EXPECT_EQ(cut.t, Rat(Int(1), Int(2)));
}

TEST(LinePlane, ParallelLineRejected) {
  Plane z1{v3(0, 0, 1), Rat(1)};
  EXPECT_THROW(intersect_line_plane(v3(0, 0, 1), v3(1, 0, 1), z1), Error);
  try {
    intersect_line_plane(v3(0, 0, 1), v3(1, 0, 1), z1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parallel_line);
  }
}

TEST(LinePlane, CutPointSatisfiesPlaneEquationExactly) {
  Plane pl{v3(3, -2, 7), Rat(Int(13), Int(5))};
  LinePlaneCut cut = intersect_line_plane(v3(1, 2, 3), v3(-4, 0, 9), pl);
  EXPECT_TRUE(pl.eval(cut.point).is_zero());
}

// ---------------------------------------------------------------------------
// Perpendicular feet
// ---------------------------------------------------------------------------

TEST(Projection, PointToPlane) {
  Plane z0{v3(0, 0, 1), Rat(0)};
  EXPECT_EQ(project_point_to_plane(v3(3, 4, 5), z0), v3(3, 4, 0));
  Plane pl{v3(2, -1, 3), Rat(4)};
  Vec3 foot = project_point_to_plane(v3(9, 9, 9), pl);
  EXPECT_TRUE(pl.eval(foot).is_zero());
  EXPECT_TRUE(cross(v3(9, 9, 9) - foot, pl.normal).is_zero());
}

TEST(Projection, PointToLine) {
  LineFoot f = project_point_to_line(v3(1, 1, 0), v3(0, 0, 0), v3(2, 0, 0));
  EXPECT_EQ(f.foot, v3(1, 0, 0));
  EXPECT_EQ(f.t, Rat(Int(1), Int(2)));
  EXPECT_TRUE(dot(v3(1, 1, 0) - f.foot, v3(2, 0, 0) - v3(0, 0, 0)).is_zero());
  EXPECT_THROW(project_point_to_line(v3(1, 1, 0), v3(2, 2, 2), v3(2, 2, 2)), Error);
}

// ---------------------------------------------------------------------------
// Determinants and derived planes
// ---------------------------------------------------------------------------

TEST(Orientation, SignsAndDegeneracy) {
  EXPECT_EQ(orientation(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)), 1);
  EXPECT_EQ(orientation(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, -1)), -1);
  EXPECT_EQ(orientation(v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(3, -2, 0)), 0);
}

TEST(Planes, ThroughThreePoints) {
  Plane pl = plane_through(v3(0, 0, 4), v3(1, 0, 4), v3(0, 1, 4));
  EXPECT_TRUE(pl.eval(v3(5, 7, 4)).is_zero());
  EXPECT_NE(pl.eval(v3(0, 0, 0)).sign(), 0);
  EXPECT_THROW(plane_through(v3(0, 0, 0), v3(1, 1, 1), v3(2, 2, 2)), Error);
}

TEST(Planes, PerpendicularAlongLine) {
  Plane base{v3(0, 0, 1), Rat(0)};
  Plane perp = plane_perpendicular_along(v3(0, 0, 0), v3(1, 0, 0), base);
  EXPECT_TRUE(dot(perp.normal, base.normal).is_zero());
  EXPECT_TRUE(perp.eval(v3(0, 0, 0)).is_zero());
  EXPECT_TRUE(perp.eval(v3(1, 0, 0)).is_zero());
  EXPECT_TRUE(perp.eval(v3(5, 0, 9)).is_zero());
  EXPECT_NE(perp.eval(v3(0, 1, 0)).sign(), 0);
}

TEST(Distances, SquaredFormsAreExact) {
  Plane pl{v3(0, 0, 2), Rat(2)};
  EXPECT_EQ(point_plane_distance2(v3(0, 0, 4), pl), Rat(9));
  EXPECT_EQ(point_line_distance2(v3(1, 1, 0), v3(0, 0, 0), v3(2, 0, 0)), Rat(1));
}

}  // namespace
}  // namespace polystat
