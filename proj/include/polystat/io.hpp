#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equilibria.hpp"
#include "polyhedron.hpp"

namespace polystat {

using Json = nlohmann::json;

// Rationals serialize as JSON integers when they fit in 64 bits, otherwise
// as canonical strings ("p" or "p/q"). Parsing accepts integers and such
// strings; anything else (floats in particular) is a schema error.
inline Json rat_to_json(const Rat& r) {
  if (r.is_integer()) {
    Int n = r.num();
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return Json(static_cast<std::int64_t>(n));
  }
  return Json(r.str());
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  fail(Errc::schema_error, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Json vec3_to_json(const Vec3& v) {
  return Json::array({rat_to_json(v.x), rat_to_json(v.y), rat_to_json(v.z)});
}

inline Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    fail(Errc::schema_error, "expected a coordinate triple, got " + j.dump());
  return Vec3{rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

inline Json serialize(const WeightedPolyhedron& wp) {
  Json vertices = Json::array();
  for (const Vec3& v : wp.shape.vertices()) vertices.push_back(vec3_to_json(v));
  Json faces = Json::array();
  for (const auto& c : wp.shape.faces()) faces.push_back(Json(c));
  return Json{{"vertices", std::move(vertices)},
              {"faces", std::move(faces)},
              {"center", vec3_to_json(wp.center)}};
}

// Parses the standard schema, re-orients faces outward if needed (reported
// through `reoriented`), then insists on full validity and a strictly
// interior center.
inline WeightedPolyhedron parse(const Json& j, bool* reoriented = nullptr) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces") || !j.contains("center"))
    fail(Errc::schema_error, "expected an object with vertices, faces, and center");
  if (!j["vertices"].is_array() || !j["faces"].is_array())
    fail(Errc::schema_error, "vertices and faces must be arrays");
  std::vector<Vec3> vertices;
  for (const Json& v : j["vertices"]) vertices.push_back(vec3_from_json(v));
  std::vector<std::vector<int>> faces;
  for (const Json& f : j["faces"]) {
    if (!f.is_array() || f.size() < 3)
      fail(Errc::schema_error, "each face must be an array of at least 3 vertex indices");
    std::vector<int> cycle;
    for (const Json& idx : f) {
      if (!idx.is_number_integer())
        fail(Errc::schema_error, "face entries must be integer vertex indices");
      long long raw = idx.get<long long>();
      if (raw < 0 || raw >= static_cast<long long>(vertices.size()))
        fail(Errc::schema_error, "vertex index " + std::to_string(raw) + " out of range");
      cycle.push_back(static_cast<int>(raw));
    }
    faces.push_back(std::move(cycle));
  }
  Vec3 center = vec3_from_json(j["center"]);

  auto [shape, changed] = oriented_outward(Polyhedron(std::move(vertices), std::move(faces)));
  if (reoriented) *reoriented = changed;
  ValidationReport vr = validate(shape);
  if (!vr.ok) {
    std::string msg = "invalid polyhedron";
    for (const std::string& problem : vr.problems) msg += "; " + problem;
    fail(Errc::validation_failed, msg);
  }
  if (!is_interior(shape, center))
    fail(Errc::center_not_interior, "center is not strictly interior");
  return WeightedPolyhedron{std::move(shape), std::move(center)};
}

inline Json degeneracy_to_json(const Degeneracy& d) {
  return Json{{"kind", to_string(d.kind)}, {"id", d.id}, {"reason", d.reason}};
}

// {"S":[faces], "H":[[u,v],...], "U":[vertices], "maxwell":bool, "degenerate":[...]}
inline Json report_to_json(const Polyhedron& p, const EquilibriumReport& r) {
  Json saddles = Json::array();
  for (int ei : r.saddle_edges) {
    const Edge& e = p.edge(ei);
    saddles.push_back(Json::array({e.u, e.v}));
  }
  Json degenerate = Json::array();
  for (const Degeneracy& d : r.degenerate) degenerate.push_back(degeneracy_to_json(d));
  return Json{{"S", r.stable_faces},
              {"H", std::move(saddles)},
              {"U", r.unstable_vertices},
              {"maxwell", maxwell_check(r)},
              {"degenerate", std::move(degenerate)}};
}

}  // namespace polystat
