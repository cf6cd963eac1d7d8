#include <gtest/gtest.h>

#include <vector>

#include "polystat/fixtures.hpp"
#include "polystat/tipping.hpp"

namespace polystat {
namespace {

Vec3 v3(long long x, long long y, long long z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

TEST(Exits, MonostableFixture) {
  WeightedPolyhedron wp = fixture_t0();
  const Polyhedron& t = wp.shape;

  ExitResult e0 = exit_edge(wp, 0);
  ASSERT_EQ(e0.kind, ExitKind::Exit);
  EXPECT_EQ(e0.edge, t.edge_between(1, 2));
  EXPECT_EQ(t.edge(e0.edge).other_face(0), 3);

  ExitResult e1 = exit_edge(wp, 1);
  ASSERT_EQ(e1.kind, ExitKind::Exit);
  EXPECT_EQ(e1.edge, t.edge_between(0, 3));
  EXPECT_EQ(t.edge(e1.edge).other_face(1), 2);

  ExitResult e2 = exit_edge(wp, 2);
  ASSERT_EQ(e2.kind, ExitKind::Exit);
  EXPECT_EQ(e2.edge, t.edge_between(1, 3));
  EXPECT_EQ(t.edge(e2.edge).other_face(2), 0);

  EXPECT_EQ(exit_edge(wp, 3).kind, ExitKind::Stable);
}

std::vector<int> face_sequence(const TipPath& path, int start) {
  std::vector<int> seq{start};
  for (const TipStep& s : path.steps) seq.push_back(s.to_face);
  return seq;
}

TEST(Tipping, AllRoadsLeadToTheStableFace) {
  WeightedPolyhedron wp = fixture_t0();
  EXPECT_EQ(face_sequence(tip_path(wp, 0), 0), std::vector<int>({0, 3}));
  EXPECT_EQ(face_sequence(tip_path(wp, 1), 1), std::vector<int>({1, 2, 0, 3}));
  EXPECT_EQ(face_sequence(tip_path(wp, 2), 2), std::vector<int>({2, 0, 3}));
  EXPECT_EQ(face_sequence(tip_path(wp, 3), 3), std::vector<int>({3}));
}

TEST(Tipping, HeightsDecreaseStrictly) {
  WeightedPolyhedron wp = fixture_t0();
  for (int start = 0; start < 4; ++start) {
    TipPath path = tip_path(wp, start);
    for (const TipStep& s : path.steps)
      EXPECT_LT(face_height2(wp, s.to_face), face_height2(wp, s.from_face));
  }
}

TEST(Tipping, MonoMonostaticSeedRollsHome) {
  WeightedPolyhedron wp = fixture_seed585();
  std::vector<std::size_t> want_steps = {1, 1, 0, 1, 2};
  for (int start = 0; start < wp.shape.num_faces(); ++start) {
    TipPath path = tip_path(wp, start);
    EXPECT_EQ(path.terminal_face, 2) << "start " << start;
    EXPECT_EQ(path.steps.size(), want_steps[static_cast<std::size_t>(start)]) << "start " << start;
  }
}

TEST(Tipping, RegularTetrahedronNeverMoves) {
  WeightedPolyhedron wp = fixture_regular_tetrahedron();
  for (int start = 0; start < 4; ++start) {
    TipPath path = tip_path(wp, start);
    EXPECT_TRUE(path.steps.empty());
    EXPECT_EQ(path.terminal_face, start);
  }
}

TEST(Tipping, MultistableFixtureStopsEarly) {
  WeightedPolyhedron wp = fixture_nine_centers();
  TipPath path = tip_path(wp, 2);
  ASSERT_EQ(path.steps.size(), 1u);
  EXPECT_EQ(path.terminal_face, 0);
}

// A center hanging over a base corner pivots onto the vertex; quasi-static
// tipping has no verdict there and must say so.
TEST(Tipping, WedgeOverCornerExitsOnVertex) {
  Polyhedron t = tetrahedron(v3(0, 0, 0), v3(40, 0, 0), v3(0, 40, 0), v3(-10, -10, 30));
  Vec3 o = t.vertex(3) + (centroid(t) - t.vertex(3)) * Rat(1, 4);
  ASSERT_TRUE(is_interior(t, o));
  WeightedPolyhedron wp{t, o};

  ExitResult e = exit_edge(wp, 3);
  ASSERT_EQ(e.kind, ExitKind::VertexExit);
  EXPECT_EQ(e.vertex, 0);
  for (int f = 0; f < 3; ++f) EXPECT_EQ(exit_edge(wp, f).kind, ExitKind::Stable);
  try {
    tip_path(wp, 3);
    FAIL() << "expected VertexExitEncountered";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::vertex_exit);
  }
}

TEST(Tipping, FootOnEdgeLineIsDegenerate) {
  Polyhedron t = fixture_t0().shape;
  Plane base = t.face_plane(3);
  Plane cut = plane_perpendicular_along(t.vertex(1), t.vertex(2), base);
  Vec3 cen = centroid(t);
  Vec3 toward = (t.vertex(1) + t.vertex(2)) * Rat(1, 2);
  toward = toward + (t.vertex(3) - toward) * Rat(1, 100);
  ASSERT_LT(cut.eval(cen).sign() * cut.eval(toward).sign(), 0);
  WeightedPolyhedron wp{t, intersect_line_plane(cen, toward, cut).point};
  try {
    exit_edge(wp, 3);
    FAIL() << "expected DegenerateExit";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::degenerate_exit);
  }
}

TEST(Tipping, RejectsBadFaceIndex) {
  EXPECT_THROW(exit_edge(fixture_t0(), 9), Error);
  EXPECT_THROW(tip_path(fixture_t0(), -1), Error);
}

}  // namespace
}  // namespace polystat
