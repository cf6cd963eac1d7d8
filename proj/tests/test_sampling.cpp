#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "polystat/convex_hull.hpp"
#include "polystat/equilibria.hpp"
#include "polystat/sampling.hpp"
#include "polystat/vertex_links.hpp"

namespace polystat {
namespace {

Vec3 v3(long long x, long long y, long long z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

TEST(Rng, DeterministicAcrossInstances) {
  Rng a(7), b(7), c(8);
  bool other_seed_matches = true;
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(a.uniform(-1000, 1000), b.uniform(-1000, 1000));
    other_seed_matches = other_seed_matches && Rng(7).next_u64() == c.next_u64();
  }
  EXPECT_FALSE(other_seed_matches);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    long long x = rng.uniform(-5, 11);
    EXPECT_GE(x, -5);
    EXPECT_LE(x, 11);
  }
  Vec3 p = rng.point_in_cube(9);
  for (const Rat* c : {&p.x, &p.y, &p.z}) {
    EXPECT_TRUE(c->is_integer());
    EXPECT_LE(*c, Rat(9));
    EXPECT_GE(*c, Rat(-9));
  }
}

TEST(Sampling, TetrahedraAreStrict) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Polyhedron t = random_tetrahedron(rng);
    ASSERT_TRUE(t.is_tetrahedron());
    ASSERT_TRUE(validate(t).ok);
    for (int e = 0; e < t.num_edges(); ++e)
      EXPECT_NE(dihedral_sign(t, e), AngleClass::Right);
    for (int v = 0; v < 4; ++v) {
      VertexSignature sig = vertex_signature(t, v);
      EXPECT_EQ(sig.right_face_angles, 0);
      EXPECT_EQ(sig.right_dihedrals, 0);
    }
  }
}

TEST(Sampling, InteriorPointsAreInterior) {
  Rng rng(6);
  Polyhedron t = random_tetrahedron(rng);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_interior(t, random_interior_point(rng, t)));
}

TEST(Sampling, WeightedPolyhedraClassifyCleanly) {
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    WeightedPolyhedron wp = random_weighted_polyhedron(rng);
    ASSERT_TRUE(validate(wp.shape).ok);
    ASSERT_TRUE(is_interior(wp.shape, wp.center));
    EquilibriumReport r = classify(wp);
    EXPECT_TRUE(r.reliable());
    EXPECT_TRUE(maxwell_check(r));
  }
}

TEST(Sampling, DirectionTriplesAreStrict) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    std::array<Vec3, 3> tri = random_direction_triple(rng);
    SphericalTriangleClass c = classify_spherical_triangle(tri[0], tri[1], tri[2]);
    EXPECT_FALSE(c.has_quarter_edge());
    EXPECT_FALSE(c.has_right_angle());
  }
}

TEST(Hull, DropsInteriorPoints) {
  auto hull = convex_hull({v3(0, 0, 0), v3(4, 0, 0), v3(0, 4, 0), v3(0, 0, 4), v3(1, 1, 1)});
  ASSERT_TRUE(hull.has_value());
  EXPECT_EQ(face_vector(*hull), (FaceVector{4, 6, 4}));
  EXPECT_TRUE(validate(*hull).ok);
  EXPECT_TRUE(is_interior(*hull, v3(1, 1, 1)));
}

TEST(Hull, RejectsDegenerateInputs) {
  EXPECT_FALSE(convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)}).has_value());
  EXPECT_FALSE(convex_hull({v3(0, 0, 0), v3(4, 0, 0), v3(0, 4, 0), v3(4, 4, 0)}).has_value());
  EXPECT_FALSE(convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, 0)})
                   .has_value());
}

// Exactly cocircular corner sets (like a cube's) violate the strict general
// position the incremental hull insists on.
TEST(Hull, RejectsExactCube) {
  std::vector<Vec3> corners;
  for (long long x : {-1, 1})
    for (long long y : {-1, 1})
      for (long long z : {-1, 1}) corners.push_back(v3(x, y, z));
  EXPECT_FALSE(convex_hull(corners).has_value());
}

TEST(Hull, RandomCloudsProduceValidHulls) {
  Rng rng(11);
  int built = 0;
  while (built < 10) {
    std::vector<Vec3> cloud;
    for (int i = 0; i < 10; ++i) cloud.push_back(rng.point_in_cube(50));
    auto hull = convex_hull(cloud);
    if (!hull) continue;
    ++built;
    ASSERT_TRUE(validate(*hull).ok);
    FaceVector fv = face_vector(*hull);
    EXPECT_EQ(fv.f - fv.e + fv.v, 2);
    for (const Vec3& p : cloud) {
      bool vertex_of_hull = false;
      for (int v = 0; v < hull->num_vertices(); ++v)
        if (hull->vertex(v) == p) vertex_of_hull = true;
      EXPECT_TRUE(vertex_of_hull || is_interior(*hull, p));
    }
  }
}

}  // namespace
}  // namespace polystat
