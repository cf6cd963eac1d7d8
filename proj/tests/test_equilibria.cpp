#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "polystat/equilibria.hpp"
#include "polystat/fixtures.hpp"
#include "polystat/geometry.hpp"
#include "polystat/sampling.hpp"

namespace polystat {
namespace {

Vec3 v3(long long x, long long y, long long z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

TEST(Classification, MonostableFixture) {
  EquilibriumReport r = classify(fixture_t0());
  EXPECT_TRUE(r.reliable());
  EXPECT_EQ(r.stable_faces, std::vector<int>({3}));
  EXPECT_EQ(r.unstable_vertices, std::vector<int>({0, 2}));
  ASSERT_EQ(r.H(), 1);
  EXPECT_TRUE(maxwell_check(r));
}

TEST(Classification, NineCentersCoverAllPairs) {
  Polyhedron shape = nine_centers_shape();
  for (const auto& [name, center] : nine_center_points()) {
    WeightedPolyhedron wp{shape, center};
    EquilibriumReport r = classify(wp);
    EXPECT_TRUE(r.reliable()) << name;
    EXPECT_EQ(r.S(), name[1] - '0') << name;
    EXPECT_EQ(r.U(), name[2] - '0') << name;
    EXPECT_TRUE(maxwell_check(r)) << name;
  }
}

TEST(Classification, NineCentersCentroid) {
  EquilibriumReport r = classify(fixture_nine_centers());
  EXPECT_TRUE(r.reliable());
  EXPECT_EQ(r.stable_faces, std::vector<int>({0, 1, 3}));
  EXPECT_EQ(r.unstable_vertices, std::vector<int>({0, 1, 2}));
  EXPECT_EQ(r.H(), 4);
}

TEST(Classification, MonoMonostaticSeed) {
  EquilibriumReport r = classify(fixture_seed585());
  EXPECT_TRUE(r.reliable());
  EXPECT_EQ(r.stable_faces, std::vector<int>({2}));
  EXPECT_EQ(r.unstable_vertices, std::vector<int>({0}));
  EXPECT_EQ(r.H(), 0);
  EXPECT_TRUE(maxwell_check(r));
}

TEST(Classification, RegularTetrahedronIsFullyBalanced) {
  EquilibriumReport r = classify(fixture_regular_tetrahedron());
  EXPECT_TRUE(r.reliable());
  EXPECT_EQ(r.S(), 4);
  EXPECT_EQ(r.H(), 6);
  EXPECT_EQ(r.U(), 4);
}

// Center chosen so that its foot lands exactly on an edge line of the base
// face: the stable-face test must flag the face instead of deciding.
TEST(Classification, DegenerateFootIsFlagged) {
  Polyhedron t = fixture_t0().shape;
  Plane base = t.face_plane(3);
  Plane cut = plane_perpendicular_along(t.vertex(1), t.vertex(2), base);
  Vec3 cen = centroid(t);
  Vec3 toward = (t.vertex(1) + t.vertex(2)) * Rat(1, 2);
  toward = toward + (t.vertex(3) - toward) * Rat(1, 100);
  ASSERT_LT(cut.eval(cen).sign() * cut.eval(toward).sign(), 0);
  Vec3 o = intersect_line_plane(cen, toward, cut).point;
  ASSERT_TRUE(is_interior(t, o));

  EquilibriumReport r = classify(WeightedPolyhedron{t, o});
  EXPECT_FALSE(r.reliable());
  bool face_flagged = false;
  for (const Degeneracy& d : r.degenerate)
    if (d.kind == ElementKind::Face && d.id == 3) face_flagged = true;
  EXPECT_TRUE(face_flagged);
}

TEST(Classification, MaxwellHoldsOnRandomBatch) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    WeightedPolyhedron wp = random_weighted_polyhedron(rng);
    EquilibriumReport r = classify(wp);
    ASSERT_TRUE(r.reliable());
    EXPECT_TRUE(maxwell_check(r)) << "sample " << i;
  }
}

TEST(Classification, CubeAboutGenericCenter) {
  std::vector<Vec3> verts = {v3(-1, -1, -1), v3(1, -1, -1), v3(1, 1, -1), v3(-1, 1, -1),
                             v3(-1, -1, 1),  v3(1, -1, 1),  v3(1, 1, 1),  v3(-1, 1, 1)};
  std::vector<std::vector<int>> faces = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                         {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  WeightedPolyhedron wp{Polyhedron(std::move(verts), std::move(faces)),
                        Vec3{Rat(1, 7), Rat(1, 9), Rat(1, 11)}};
  EquilibriumReport r = classify(wp);
  EXPECT_TRUE(r.reliable());
  EXPECT_EQ(r.S(), 6);
  EXPECT_EQ(r.H(), 12);
  EXPECT_EQ(r.U(), 8);
}

}  // namespace
}  // namespace polystat
