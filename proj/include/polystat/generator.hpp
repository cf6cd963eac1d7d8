#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polystat/duality.hpp"
#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/fixtures.hpp"
#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"

namespace polystat {

namespace detail {

// Largest s with 4^s <= q, from bit lengths plus a short exact correction.
inline int floor_log2_half(const Rat& q) {
  using boost::multiprecision::msb;
  long approx = static_cast<long>(msb(q.num())) - static_cast<long>(msb(q.den()));
  int s = static_cast<int>(approx / 2);
  while (Rat::pow2(2 * (s + 1)) <= q) ++s;
  while (Rat::pow2(2 * s) > q) --s;
  return s;
}

// Shortest integer vector on the same ray: positive scaling never changes a
// sign predicate, and small components keep later arithmetic cheap.
inline Vec3 reduce_direction(const Vec3& d) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Int l = lcm(lcm(d.x.den(), d.y.den()), d.z.den());
  Rat lr{l};
  Int g = gcd(gcd((d.x * lr).num(), (d.y * lr).num()), (d.z * lr).num());
  if (g < 0) g = -g;
  if (g == 0) return d;
  return d * Rat(l, g);
}

}  // namespace detail

// A vertex move that splits one nontriangular face along a diagonal.
struct BendPlan {
  int vertex = -1;
  int face = -1;
  std::array<int, 2> diagonal{-1, -1};  // neighbours of vertex in the face cycle
};

// Deterministic plan: the lowest-index vertex lying on one to three
// nontriangular faces, paired with its lowest-index nontriangular face.
inline BendPlan select_bend_vertex(const Polyhedron& p) {
  bool any = false;
  for (int f = 0; f < p.num_faces(); ++f)
    if (p.face(f).size() > 3) any = true;
  if (!any) fail(Errc::all_faces_triangular, "no face to bend");
  for (int v = 0; v < p.num_vertices(); ++v) {
    int count = 0, first = -1;
    for (int f = 0; f < p.num_faces(); ++f) {
      if (p.face(f).size() > 3 && p.face_contains(f, v)) {
        ++count;
        if (first < 0) first = f;
      }
    }
    if (count >= 1 && count <= 3) {
      BendPlan plan;
      plan.vertex = v;
      plan.face = first;
      const std::vector<int>& cycle = p.face(first);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] == v) {
          plan.diagonal[0] = cycle[(i + cycle.size() - 1) % cycle.size()];
          plan.diagonal[1] = cycle[(i + 1) % cycle.size()];
        }
      return plan;
    }
  }
  fail(Errc::bend_failed, "no vertex lies on one to three nontriangular faces");
}

// Moves the plan's vertex slightly off its face F, into the intersection of
// the other nontriangular face planes at that vertex, on the interior side
// of F.  F loses the vertex and a new triangle over the diagonal takes it.
// The displacement shrinks dyadically until the classification transfers
// exactly as required: vertex equilibria unchanged, face equilibria off F
// unchanged, and F's equilibrium (if any) landing on exactly one of the two
// split faces.
inline WeightedPolyhedron bend_face(const WeightedPolyhedron& wp, const BendPlan& plan) {
  const Polyhedron& p = wp.shape;
  if (plan.face < 0 || plan.face >= p.num_faces() || plan.vertex < 0 ||
      plan.vertex >= p.num_vertices() || !p.face_contains(plan.face, plan.vertex))
    fail(Errc::not_incident, "bend plan does not name a vertex of its face");
  if (p.face(plan.face).size() <= 3) fail(Errc::schema_error, "cannot bend a triangle");

  EquilibriumReport before = classify(wp);
  if (!before.reliable())
    fail(Errc::degenerate_classification, "classification is degenerate before bending");

  const Vec3& v_old = p.vertex(plan.vertex);
  Plane face_plane = p.face_plane(plan.face);

  // the proof's caveat: the foot of the center on the face must miss the diagonal
  {
    Vec3 foot = project_point_to_plane(wp.center, face_plane);
    const Vec3& d0 = p.vertex(plan.diagonal[0]);
    const Vec3& d1 = p.vertex(plan.diagonal[1]);
    if (cross(d1 - d0, foot - d0).is_zero())
      fail(Errc::general_position_violated,
           "foot of the center on the bent face lies on the chosen diagonal");
  }

  // direction: inward normal of the face, constrained to the planes of the
  // other nontriangular faces at the vertex
  std::vector<Plane> others;
  for (int f = 0; f < p.num_faces(); ++f)
    if (f != plan.face && p.face(f).size() > 3 && p.face_contains(f, plan.vertex))
      others.push_back(p.face_plane(f));
  Vec3 d{Rat(0), Rat(0), Rat(0)};
  if (others.empty()) {
    d = -face_plane.normal;
  } else if (others.size() == 1) {
    const Vec3& n2 = others[0].normal;
    Rat lambda = dot(face_plane.normal, n2) / dot(n2, n2);
    d = -face_plane.normal + n2 * lambda;
  } else if (others.size() == 2) {
    d = cross(detail::reduce_direction(others[0].normal),
              detail::reduce_direction(others[1].normal));
    Rat along = dot(d, face_plane.normal);
    if (along > Rat(0)) d = -d;
    if (along.is_zero()) d = Vec3{Rat(0), Rat(0), Rat(0)};
  } else {
    fail(Errc::bend_failed, "vertex lies on more than three nontriangular faces");
  }
  if (d.is_zero()) fail(Errc::bend_failed, "no usable bend direction at this vertex");
  d = detail::reduce_direction(d);

  // starting displacement: an eighth of the distance to the nearest
  // non-incident face plane, rounded down to a power of two
  Rat clearance2;
  bool have = false;
  for (int f = 0; f < p.num_faces(); ++f) {
    if (p.face_contains(f, plan.vertex)) continue;
    Rat d2 = point_plane_distance2(v_old, p.face_plane(f));
    if (!have || d2 < clearance2) {
      clearance2 = d2;
      have = true;
    }
  }
  if (!have || clearance2.is_zero()) fail(Errc::bend_failed, "vertex has no clearance to move");
  Rat budget2 = clearance2 / Rat(64);
  Rat dir2 = norm2(d);
  int s = detail::floor_log2_half(budget2 / dir2) + 2;
  while (Rat::pow2(2 * s) * dir2 > budget2) --s;

  for (int attempt = 0; attempt < 64; ++attempt, --s) {
    Vec3 v_new = v_old + d * Rat::pow2(s);

    std::vector<Vec3> vertices = p.vertices();
    vertices[static_cast<std::size_t>(plan.vertex)] = v_new;
    std::vector<std::vector<int>> faces = p.faces();
    std::vector<int>& bent = faces[static_cast<std::size_t>(plan.face)];
    bent.erase(std::find(bent.begin(), bent.end(), plan.vertex));
    std::vector<int> tri{plan.diagonal[0], plan.vertex, plan.diagonal[1]};
    {
      Vec3 n = cross(vertices[static_cast<std::size_t>(tri[1])] -
                         vertices[static_cast<std::size_t>(tri[0])],
                     vertices[static_cast<std::size_t>(tri[2])] -
                         vertices[static_cast<std::size_t>(tri[0])]);
      Rat side = dot(n, wp.center - vertices[static_cast<std::size_t>(tri[0])]);
      if (side.is_zero()) continue;
      if (side > Rat(0)) std::swap(tri[0], tri[2]);
    }
    faces.push_back(tri);
    const int tri_id = static_cast<int>(faces.size()) - 1;

    Polyhedron shape(std::move(vertices), std::move(faces));
    if (!shape.combinatorics_ok() || !validate(shape).ok) continue;
    if (!is_interior(shape, wp.center)) continue;
    WeightedPolyhedron out{std::move(shape), wp.center};
    EquilibriumReport after = classify(out);
    if (!after.reliable()) continue;

    if (after.unstable_vertices != before.unstable_vertices) continue;
    std::vector<int> stable_before_off, stable_after_off;
    for (int f : before.stable_faces)
      if (f != plan.face) stable_before_off.push_back(f);
    for (int f : after.stable_faces)
      if (f != plan.face && f != tri_id) stable_after_off.push_back(f);
    if (stable_before_off != stable_after_off) continue;
    bool was_stable =
        std::find(before.stable_faces.begin(), before.stable_faces.end(), plan.face) !=
        before.stable_faces.end();
    int split_stable = 0;
    for (int f : after.stable_faces)
      if (f == plan.face || f == tri_id) ++split_stable;
    if (was_stable ? split_stable != 1 : split_stable != 0) continue;

    return out;
  }
  fail(Errc::bend_failed, "no displacement within the dyadic budget passed verification");
}

inline WeightedPolyhedron seed_585() { return fixture_seed585(); }

inline bool verify_mono_monostatic(const WeightedPolyhedron& wp) {
  EquilibriumReport r = classify(wp);
  return r.reliable() && r.stable_faces.size() == 1 && r.unstable_vertices.size() == 1;
}

namespace detail {

inline int min_faces_for(int v) { return (v + 1) / 2 + 2; }

inline WeightedPolyhedron generate_impl(int f, int v, std::vector<std::string>* trace) {
  WeightedPolyhedron wp;
  if (f == 5 && v == 5) {
    wp = seed_585();
    if (trace) trace->push_back("seed(5,5)");
  } else if (f > min_faces_for(v)) {
    wp = generate_impl(f - 1, v, trace);
    wp = bend_face(wp, select_bend_vertex(wp.shape));
    if (trace)
      trace->push_back("bend(" + std::to_string(f) + "," + std::to_string(v) + ")");
  } else {
    wp = generate_impl(v, f, trace);
    wp = polar_dual(wp).first;
    if (trace)
      trace->push_back("dual(" + std::to_string(f) + "," + std::to_string(v) + ")");
  }
  FaceVector fv = face_vector(wp.shape);
  EquilibriumReport r = classify(wp);
  if (fv.f != f || fv.v != v || fv.e != f + v - 2 || !validate(wp.shape).ok ||
      !r.reliable() || r.stable_faces.size() != 1 || r.unstable_vertices.size() != 1 ||
      !r.saddle_edges.empty())
    fail(Errc::construction_failed, "verification failed at (" + std::to_string(f) + "," +
                                        std::to_string(v) + ")");
  return wp;
}

}  // namespace detail

// Builds a weighted polyhedron with exactly one stable and one unstable
// equilibrium for the requested face and vertex counts: bending adds faces
// one at a time and dualization transposes the face vector, starting from
// the five-face seed.
inline WeightedPolyhedron generate_mono_monostatic(int f, int v,
                                                   std::vector<std::string>* trace = nullptr) {
  if (!is_legal_face_vector(f, f + v - 2, v))
    fail(Errc::illegal_face_vector, "(" + std::to_string(f) + "," + std::to_string(f + v - 2) +
                                        "," + std::to_string(v) + ") is not a face vector");
  if (f == 4 && v == 4)
    fail(Errc::excluded_tetrahedron,
         "no weighted tetrahedron has exactly one stable and one unstable equilibrium");
  return detail::generate_impl(f, v, trace);
}

}  // namespace polystat
