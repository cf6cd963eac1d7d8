#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyhedron.hpp"

namespace polystat {

namespace detail {

inline Vec3 vi(long long x, long long y, long long z) {
  return Vec3{Rat(x), Rat(y), Rat(z)};
}

}  // namespace detail

// Tetrahedron with an obtuse path along A-B-C-D, monostable on the face
// opposite D (triangle ABC, face id 3) for the bundled center.
// Monostable tetrahedron: the center loads face 3 (triangle 0-1-2) as the
// only stable face, with two unstable vertices and one saddle edge.  Its
// obtuse dihedrals sit on edges 1-2, 1-3 and 0-3, forming the path 2-1-3-0.
inline WeightedPolyhedron fixture_t0() {
  using detail::vi;
  Polyhedron t = tetrahedron(vi(0, 0, 0), vi(100000, 0, 0), vi(153600, 44400, 0),
                             vi(112200, 7800, 6400));
  return WeightedPolyhedron{std::move(t), vi(104200, 4300, 100)};
}

// Tetrahedron admitting all nine (S,U) combinations with S,U in {2,3,4},
// depending on which of the nine bundled centers is installed.
inline Polyhedron nine_centers_shape() {
  using detail::vi;
  return tetrahedron(vi(0, 0, 0), vi(100000, 0, 0), vi(50000, 41429, 0),
                     vi(13549, 13544, 11223));
}

// Named centers for nine_centers_shape, in row-major name order.
inline const std::vector<std::pair<std::string, Vec3>>& nine_center_points() {
  using detail::vi;
  static const std::vector<std::pair<std::string, Vec3>> kCenters = {
      {"M22", vi(15884, 5116, 835)},  {"M23", vi(46670, 11911, 3061)},
      {"M24", vi(28497, 5544, 2041)}, {"M32", vi(11400, 7243, 2597)},
      {"M33", vi(33447, 17389, 3061)}, {"M34", vi(23866, 8138, 3339)},
      {"M42", vi(21845, 14097, 7142)}, {"M43", vi(42514, 9100, 6122)},
      {"M44", vi(24407, 10239, 1391)}};
  return kCenters;
}

inline WeightedPolyhedron fixture_nine_centers() {
  Polyhedron t = nine_centers_shape();
  Vec3 c = centroid(t);
  return WeightedPolyhedron{std::move(t), std::move(c)};
}

// Mono-monostatic polyhedron with face vector (5,8,5): a quadrilateral base
// in the z = 0 plane and an apex just above it.
inline WeightedPolyhedron fixture_seed585() {
  using detail::vi;
  std::vector<Vec3> vertices = {vi(0, 0, 0), vi(10000, 0, 0), vi(10000, 2890, 0),
                                vi(11216, 1008, 0), vi(11216, 968, 280)};
  std::vector<std::vector<int>> faces = {
      {0, 1, 3, 2}, {0, 1, 4}, {1, 3, 4}, {3, 2, 4}, {2, 0, 4}};
  auto [shape, changed] = oriented_outward(Polyhedron(std::move(vertices), std::move(faces)));
  (void)changed;
  return WeightedPolyhedron{std::move(shape), vi(10790, 643, 84)};
}

// Tetrahedron with an obtuse cycle A-B-C-D-A whose vertex A = (-10,0,0) has
// signature [0,1]; admits a mono-unstable weighting balancing on A.
inline WeightedPolyhedron fixture_cycle_case_i() {
  using detail::vi;
  Polyhedron t = tetrahedron(vi(-10, 0, 0), vi(0, 2, 0), vi(0, -2, 0), vi(1, 0, 1));
  Vec3 c = centroid(t);
  return WeightedPolyhedron{std::move(t), std::move(c)};
}

// Tetrahedron with an obtuse cycle A-B-C-D-A whose vertex D = (0,4,1) has
// signature [2,1]; admits a mono-unstable weighting balancing on A.
inline WeightedPolyhedron fixture_cycle_case_iii() {
  using detail::vi;
  Polyhedron t = tetrahedron(vi(-10, 0, 0), vi(2, 0, 0), vi(3, 2, 0), vi(0, 4, 1));
  Vec3 c = centroid(t);
  return WeightedPolyhedron{std::move(t), std::move(c)};
}

inline WeightedPolyhedron fixture_regular_tetrahedron() {
  using detail::vi;
  Polyhedron t = tetrahedron(vi(1, 1, 1), vi(1, -1, -1), vi(-1, 1, -1), vi(-1, -1, 1));
  return WeightedPolyhedron{std::move(t), vi(0, 0, 0)};
}

inline std::vector<std::string> fixture_names() {
  return {"t0", "nine_centers", "seed585", "cycle_case_I", "cycle_case_III",
          "regular_tetrahedron"};
}

inline WeightedPolyhedron fixture(const std::string& name) {
  if (name == "t0") return fixture_t0();
  if (name == "nine_centers") return fixture_nine_centers();
  if (name == "seed585") return fixture_seed585();
  if (name == "cycle_case_I") return fixture_cycle_case_i();
  if (name == "cycle_case_III") return fixture_cycle_case_iii();
  if (name == "regular_tetrahedron") return fixture_regular_tetrahedron();
  fail(Errc::schema_error, "unknown fixture '" + name + "'");
}

}  // namespace polystat
