#pragma once

#include <set>
#include <string>
#include <vector>

#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"

namespace polystat {

enum class ExitKind { Stable, Exit, VertexExit };

struct ExitResult {
  ExitKind kind = ExitKind::Stable;
  int edge = -1;    // set for Exit
  int vertex = -1;  // set for VertexExit
};

struct TipStep {
  int from_face = -1;
  int exit_edge = -1;
  int to_face = -1;
};

struct TipPath {
  std::vector<TipStep> steps;
  int terminal_face = -1;
};

// Squared height of the center above a face's supporting plane; exact, and
// monotone in the true height for comparisons.
inline Rat face_height2(const WeightedPolyhedron& wp, int face) {
  Plane pl = wp.shape.face_plane(face);
  return point_plane_distance2(wp.center, pl);
}

// Where does the body go when resting on this face?  The foot of the center
// is tested against every edge of the face within the face plane: strictly
// inside all edges means the face holds; one violated edge tips across it;
// two violated edges meeting at a vertex mean the wedge case, i.e. the body
// pivots onto the vertex.  Beyond two edges that do not share a vertex
// (possible only for non-triangular faces), the exit is across the edge the
// foot is farthest beyond, compared exactly; ties are degenerate.
inline ExitResult exit_edge(const WeightedPolyhedron& wp, int face) {
  if (face < 0 || face >= wp.shape.num_faces())
    fail(Errc::schema_error, "no face " + std::to_string(face));
  const Polyhedron& p = wp.shape;
  const std::vector<int>& cycle = p.face(face);
  Plane pl = p.face_plane(face);
  Vec3 q = project_point_to_plane(wp.center, pl);

  const std::size_t n = cycle.size();
  std::vector<Rat> side(n);
  std::vector<bool> beyond(n, false);
  bool any_beyond = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = p.vertex(cycle[i]);
    const Vec3& b = p.vertex(cycle[(i + 1) % n]);
    side[i] = dot(cross(b - a, q - a), pl.normal);
    int s = side[i].sign();
    if (s == 0)
      fail(Errc::degenerate_exit,
           "foot of the center lies exactly on an edge line of face " + std::to_string(face));
    if (s < 0) {
      beyond[i] = true;
      any_beyond = true;
    }
  }
  if (!any_beyond) return ExitResult{ExitKind::Stable, -1, -1};

  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < n; ++i)
    if (beyond[i]) hits.push_back(i);

  auto edge_id = [&](std::size_t i) {
    return p.edge_between(cycle[i], cycle[(i + 1) % n]);
  };
  if (hits.size() == 1) return ExitResult{ExitKind::Exit, edge_id(hits[0]), -1};
  if (hits.size() == 2 && (hits[0] + 1) % n == hits[1] % n)
    return ExitResult{ExitKind::VertexExit, -1, cycle[hits[1]]};
  if (hits.size() == 2 && (hits[1] + 1) % n == hits[0])
    return ExitResult{ExitKind::VertexExit, -1, cycle[hits[0]]};

  // farthest-beyond edge: compare side_i^2 / |edge_i|^2 exactly
  std::size_t best = hits[0];
  bool tie = false;
  auto len2 = [&](std::size_t i) {
    const Vec3& a = p.vertex(cycle[i]);
    const Vec3& b = p.vertex(cycle[(i + 1) % n]);
    return norm2(b - a);
  };
  for (std::size_t k = 1; k < hits.size(); ++k) {
    std::size_t i = hits[k];
    Rat lhs = side[i] * side[i] * len2(best);
    Rat rhs = side[best] * side[best] * len2(i);
    if (lhs == rhs) {
      tie = true;
    } else if (lhs > rhs) {
      best = i;
      tie = false;
    }
  }
  if (tie)
    fail(Errc::degenerate_exit,
         "two non-adjacent exit candidates equally far on face " + std::to_string(face));
  return ExitResult{ExitKind::Exit, edge_id(best), -1};
}

// Quasi-static roll from start_face: repeatedly tip across the exit edge
// onto the neighbouring face (landings are inelastic, so each step starts
// at rest) until a stable face holds the body.
inline TipPath tip_path(const WeightedPolyhedron& wp, int start_face) {
  if (start_face < 0 || start_face >= wp.shape.num_faces())
    fail(Errc::schema_error, "no face " + std::to_string(start_face));
  TipPath path;
  std::set<int> visited;
  int face = start_face;
  for (;;) {
    ExitResult exit = exit_edge(wp, face);
    if (exit.kind == ExitKind::Stable) {
      path.terminal_face = face;
      return path;
    }
    if (exit.kind == ExitKind::VertexExit)
      fail(Errc::vertex_exit, "face " + std::to_string(face) + " exits onto vertex " +
                                  std::to_string(exit.vertex));
    if (!visited.insert(face).second)
      fail(Errc::cycle_detected, "face " + std::to_string(face) + " revisited while rolling");
    int next = wp.shape.edge(exit.edge).other_face(face);
    path.steps.push_back(TipStep{face, exit.edge, next});
    face = next;
  }
}

}  // namespace polystat
