#include <gtest/gtest.h>

#include <array>

#include "polystat/fixtures.hpp"
#include "polystat/sampling.hpp"
#include "polystat/vertex_links.hpp"

namespace polystat {
namespace {

Vec3 v3(long long x, long long y, long long z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

TEST(Dihedrals, RegularTetrahedronAllAcute) {
  Polyhedron t = fixture_regular_tetrahedron().shape;
  for (int e = 0; e < t.num_edges(); ++e)
    EXPECT_EQ(dihedral_sign(t, e), AngleClass::Acute);
  for (int v = 0; v < 4; ++v) {
    VertexSignature sig = vertex_signature(t, v);
    EXPECT_EQ(sig.m, 0);
    EXPECT_EQ(sig.n, 0);
    EXPECT_EQ(sig.right_face_angles, 0);
    EXPECT_EQ(sig.right_dihedrals, 0);
    EXPECT_TRUE(admissible_signature(sig));
  }
}

TEST(Dihedrals, MonostableFixtureHasThreeObtuseEdges) {
  Polyhedron t = fixture_t0().shape;
  auto klass = [&](int a, int b) { return dihedral_sign(t, t.edge_between(a, b)); };
  EXPECT_EQ(klass(1, 2), AngleClass::Obtuse);
  EXPECT_EQ(klass(1, 3), AngleClass::Obtuse);
  EXPECT_EQ(klass(0, 3), AngleClass::Obtuse);
  EXPECT_EQ(klass(2, 3), AngleClass::Acute);
  EXPECT_EQ(klass(0, 2), AngleClass::Acute);
  EXPECT_EQ(klass(0, 1), AngleClass::Acute);
}

TEST(Signatures, FixtureValues) {
  Polyhedron t0 = fixture_t0().shape;
  std::array<VertexSignature, 4> want_t0 = {
      VertexSignature{0, 1, 0, 0}, VertexSignature{2, 2, 0, 0}, VertexSignature{0, 1, 0, 0},
      VertexSignature{2, 2, 0, 0}};
  for (int v = 0; v < 4; ++v) EXPECT_EQ(vertex_signature(t0, v), want_t0[static_cast<std::size_t>(v)]);

  Polyhedron ci = fixture_cycle_case_i().shape;
  EXPECT_EQ(vertex_signature(ci, 0), (VertexSignature{0, 1, 0, 0}));
  for (int v = 1; v < 4; ++v) EXPECT_EQ(vertex_signature(ci, v), (VertexSignature{1, 1, 0, 0}));

  Polyhedron ciii = fixture_cycle_case_iii().shape;
  EXPECT_EQ(vertex_signature(ciii, 0), (VertexSignature{0, 1, 0, 0}));
  EXPECT_EQ(vertex_signature(ciii, 1), (VertexSignature{1, 1, 0, 0}));
  EXPECT_EQ(vertex_signature(ciii, 2), (VertexSignature{1, 1, 0, 0}));
  EXPECT_EQ(vertex_signature(ciii, 3), (VertexSignature{2, 1, 0, 0}));
}

TEST(Signatures, AdmissibleTable) {
  auto ok = [](int m, int n) { return admissible_signature(VertexSignature{m, n, 0, 0}); };
  EXPECT_TRUE(ok(0, 0));
  EXPECT_TRUE(ok(0, 1));
  EXPECT_TRUE(ok(1, 1));
  EXPECT_TRUE(ok(2, 1));
  EXPECT_TRUE(ok(2, 2));
  EXPECT_TRUE(ok(2, 3));
  EXPECT_TRUE(ok(3, 3));
  EXPECT_FALSE(ok(1, 0));
  EXPECT_FALSE(ok(2, 0));
  EXPECT_FALSE(ok(3, 0));
  EXPECT_FALSE(ok(0, 2));
  EXPECT_FALSE(ok(0, 3));
  EXPECT_FALSE(ok(1, 2));
  EXPECT_FALSE(ok(1, 3));
  EXPECT_FALSE(ok(3, 1));
  EXPECT_FALSE(ok(3, 2));
}

TEST(Signatures, RequiresTetrahedron) {
  Polyhedron s = fixture_seed585().shape;
  EXPECT_THROW(vertex_signature(s, 0), Error);
}

TEST(FaceAngles, NonNeighborsAreRejected) {
  Polyhedron s = fixture_seed585().shape;
  try {
    face_angle_sign(s, 0, 3, 4);
    FAIL() << "expected NotIncident";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_incident);
  }
}

TEST(SphericalTriangles, OrthonormalFrame) {
  SphericalTriangleClass c = classify_spherical_triangle(v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1));
  for (ArcClass e : c.edge_classes) EXPECT_EQ(e, ArcClass::Quarter);
  for (AngleClass a : c.angle_classes) EXPECT_EQ(a, AngleClass::Right);
  EXPECT_TRUE(c.has_quarter_edge());
  EXPECT_TRUE(c.has_right_angle());
  EXPECT_EQ(c.long_edges(), 0);
  EXPECT_EQ(c.obtuse_angles(), 0);
}

TEST(SphericalTriangles, DegenerateInputsThrow) {
  EXPECT_THROW(classify_spherical_triangle(v3(0, 0, 0), v3(0, 1, 0), v3(0, 0, 1)), Error);
  EXPECT_THROW(classify_spherical_triangle(v3(1, 0, 0), v3(2, 0, 0), v3(0, 0, 1)), Error);
  EXPECT_THROW(classify_spherical_triangle(v3(1, 0, 0), v3(-3, 0, 0), v3(0, 0, 1)), Error);
}

// The short/long and acute/obtuse counts of a vertex link are tied to each
// other; every random triple has to land in one of the admissible pairs.
TEST(SphericalTriangles, LinkLawsOnRandomTriples) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    std::array<Vec3, 3> tri = random_direction_triple(rng);
    SphericalTriangleClass c = classify_spherical_triangle(tri[0], tri[1], tri[2]);
    ASSERT_FALSE(c.has_quarter_edge());
    ASSERT_FALSE(c.has_right_angle());
    int m = c.long_edges();
    int n = c.obtuse_angles();
    EXPECT_TRUE(admissible_signature(VertexSignature{m, n, 0, 0})) << m << "," << n;
    if (n == 0) {
      EXPECT_EQ(m, 0);
    }
    if (m == 0) {
      EXPECT_LE(n, 1);
    }
    if (m == 3) {
      EXPECT_EQ(n, 3);
    }
    if (n == 2) {
      EXPECT_EQ(m, 2);
    }
    if (m == 1) {
      EXPECT_EQ(n, 1);
      for (int k = 0; k < 3; ++k)
        if (c.edge_classes[static_cast<std::size_t>(k)] == ArcClass::Long) {
          EXPECT_EQ(c.angle_classes[static_cast<std::size_t>(k)], AngleClass::Obtuse);
        }
    }
    if (n == 1 && m == 1) {
      for (int k = 0; k < 3; ++k)
        if (c.angle_classes[static_cast<std::size_t>(k)] == AngleClass::Obtuse) {
          EXPECT_EQ(c.edge_classes[static_cast<std::size_t>(k)], ArcClass::Long);
        }
    }
  }
}

}  // namespace
}  // namespace polystat
