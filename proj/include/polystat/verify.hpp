#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polystat/duality.hpp"
#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/fixtures.hpp"
#include "polystat/generator.hpp"
#include "polystat/monostatic.hpp"
#include "polystat/sampling.hpp"
#include "polystat/tipping.hpp"
#include "polystat/vertex_links.hpp"

namespace polystat {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Rotates a face cycle so it starts at its smallest vertex id; orientation
// is preserved, so two cycles are the same oriented face iff they match
// after this.
inline std::vector<int> rotate_to_min(const std::vector<int>& cycle) {
  std::size_t at = static_cast<std::size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::vector<int> out;
  out.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    out.push_back(cycle[(at + i) % cycle.size()]);
  return out;
}

// Every tip path must end on the given face, in at most three steps, with
// the center's height over the resting face strictly decreasing throughout.
inline bool tips_home(const WeightedPolyhedron& wp, int stable_face, std::string& why) {
  for (int start = 0; start < wp.shape.num_faces(); ++start) {
    TipPath path = tip_path(wp, start);
    if (path.terminal_face != stable_face) {
      why = "path from face " + std::to_string(start) + " ends on face " +
            std::to_string(path.terminal_face);
      return false;
    }
    if (path.steps.size() > 3) {
      why = "path from face " + std::to_string(start) + " takes " +
            std::to_string(path.steps.size()) + " steps";
      return false;
    }
    for (const TipStep& step : path.steps)
      if (!(face_height2(wp, step.to_face) < face_height2(wp, step.from_face))) {
        why = "height does not drop from face " + std::to_string(step.from_face) + " to face " +
              std::to_string(step.to_face);
        return false;
      }
  }
  return true;
}

}  // namespace detail

// Runs the whole reproduction suite and reports one result per criterion.
// Each criterion is timed on its own; shared sample sets are generated once.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1) {
  using Clock = std::chrono::steady_clock;
  std::vector<CriterionResult> results;
  auto add = [&](int id, std::string label, bool pass, std::string detail, double secs) {
    results.push_back(CriterionResult{id, std::move(label), pass, std::move(detail), secs});
  };

  // 1: the monostable tetrahedron fixture, classified exactly
  {
    WeightedPolyhedron t0 = fixture_t0();
    (void)classify(t0);
    auto t_start = Clock::now();
    EquilibriumReport r = classify(t0);
    double secs = detail::seconds_since(t_start);
    bool pass = r.reliable() && r.stable_faces == std::vector<int>{3} &&
                r.unstable_vertices.size() == 2 && r.saddle_edges.size() == 1 &&
                maxwell_check(r) && secs < 0.001;
    add(1, "monostable tetrahedron fixture classifies exactly", pass,
        "S={3} expected; got S=" + std::to_string(r.stable_faces.size()) +
            " U=" + std::to_string(r.unstable_vertices.size()) +
            " H=" + std::to_string(r.saddle_edges.size()),
        secs);
  }

  // 2: nine centers inside one tetrahedron cover all count pairs
  {
    Polyhedron shape = nine_centers_shape();
    (void)classify(WeightedPolyhedron{shape, nine_center_points()[0].second});
    auto t_start = Clock::now();
    bool pass = true;
    std::string detail_text;
    for (const auto& [name, center] : nine_center_points()) {
      EquilibriumReport r = classify(WeightedPolyhedron{shape, center});
      int want_s = name[1] - '0', want_u = name[2] - '0';
      bool ok = r.reliable() && static_cast<int>(r.stable_faces.size()) == want_s &&
                static_cast<int>(r.unstable_vertices.size()) == want_u && maxwell_check(r);
      if (!ok) {
        pass = false;
        detail_text += name + " wrong; ";
      }
    }
    double secs = detail::seconds_since(t_start);
    pass = pass && secs < 0.010;
    add(2, "nine centers give all stable/unstable pairs over {2,3,4}^2", pass,
        detail_text.empty() ? "all nine exact" : detail_text, secs);
  }

  // 3: the five-face seed
  {
    auto t_start = Clock::now();
    WeightedPolyhedron wp = fixture_seed585();
    EquilibriumReport r = classify(wp);
    FaceVector fv = face_vector(wp.shape);
    bool pass = r.reliable() && r.stable_faces.size() == 1 && r.unstable_vertices.size() == 1 &&
                r.saddle_edges.empty() && fv == FaceVector{5, 8, 5};
    add(3, "five-face seed: one stable face, one unstable vertex", pass,
        "face vector (" + std::to_string(fv.f) + "," + std::to_string(fv.e) + "," +
            std::to_string(fv.v) + ")",
        detail::seconds_since(t_start));
  }

  // 4: the alternating count relation on random weighted polyhedra
  std::vector<WeightedPolyhedron> random_polys;
  {
    auto t_start = Clock::now();
    Rng rng(seed);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      WeightedPolyhedron wp = random_weighted_polyhedron(rng);
      EquilibriumReport r = classify(wp);
      if (!r.reliable() || !maxwell_check(r)) ++bad;
      random_polys.push_back(std::move(wp));
    }
    double secs = detail::seconds_since(t_start);
    add(4, "random polyhedra: S - H + U = 2 on every instance", bad == 0 && secs < 10.0,
        std::to_string(1000 - bad) + "/1000 satisfy the relation", secs);
  }

  // shared sweep over random tetrahedra, feeding criteria 5 through 8 and 10
  struct TetraSweep {
    int samples = 0;
    int with_path = 0, with_cycle = 0, with_both = 0;
    int load_failures = 0;         // faces of path tetrahedra that failed to load
    int spurious_loads = 0;        // path-free tetrahedra where loading succeeded
    int wrong_second_count = 0;    // monostable without U=2 or mono-unstable without S=2
    int cycle_build_failures = 0;  // cycles where the dyadic search found no center
    int forbidden_multisets = 0;   // single-vertex balance seen with an impossible multiset
    int cycle_free_single_u = 0;   // random center with U=1 but no cycle
    int tip_failures = 0;
    std::string first_problem;
    double seconds = 0.0;
  } sweep;
  {
    auto t_start = Clock::now();
    Rng rng(seed + 1);
    auto note = [&](const std::string& what) {
      if (sweep.first_problem.empty()) sweep.first_problem = what;
    };
    for (int i = 0; i < 10000; ++i) {
      Polyhedron t = random_tetrahedron(rng);
      ++sweep.samples;
      std::vector<ObtusePath> paths = find_obtuse_paths(t);
      std::vector<ObtuseCycle> cycles = find_obtuse_cycles(t);
      if (!paths.empty()) ++sweep.with_path;
      if (!cycles.empty()) ++sweep.with_cycle;
      if (!paths.empty() && !cycles.empty()) {
        ++sweep.with_both;
        note("sample " + std::to_string(i) + " has both a path and a cycle");
      }
      if (!paths.empty()) {
        for (int face = 0; face < 4; ++face) {
          try {
            WeightedPolyhedron wp = monostable_weighting(t, face);
            EquilibriumReport r = classify(wp);
            if (r.unstable_vertices.size() != 2) {
              ++sweep.wrong_second_count;
              note("monostable weighting with U != 2 at sample " + std::to_string(i));
            }
            std::string why;
            if (!detail::tips_home(wp, face, why)) {
              ++sweep.tip_failures;
              note("tipping: " + why + " at sample " + std::to_string(i));
            }
          } catch (const Error& e) {
            ++sweep.load_failures;
            note("loading face " + std::to_string(face) + " of sample " + std::to_string(i) +
                 " failed: " + e.what());
          }
        }
      } else {
        for (int face = 0; face < 4; ++face) {
          try {
            (void)monostable_weighting(t, face);
            ++sweep.spurious_loads;
            note("path-free sample " + std::to_string(i) + " loaded face " +
                 std::to_string(face));
          } catch (const Error&) {
          }
        }
      }
      if (!cycles.empty()) {
        try {
          WeightedPolyhedron wp = monounstable_weighting(t, cycles[0]);
          EquilibriumReport r = classify(wp);
          if (r.stable_faces.size() != 2) {
            ++sweep.wrong_second_count;
            note("mono-unstable weighting with S != 2 at sample " + std::to_string(i));
          }
        } catch (const Error& e) {
          ++sweep.cycle_build_failures;
          note("cycle construction failed at sample " + std::to_string(i) + ": " + e.what());
        }
      }
      Vec3 o = random_interior_point(rng, t);
      EquilibriumReport r = classify(WeightedPolyhedron{t, o});
      if (r.reliable() && r.unstable_vertices.size() == 1) {
        if (cycles.empty()) {
          ++sweep.cycle_free_single_u;
          note("cycle-free sample " + std::to_string(i) + " classified U=1");
        }
        std::multiset<std::pair<int, int>> multiset;
        for (int v = 0; v < 4; ++v) {
          VertexSignature s = vertex_signature(t, v);
          multiset.insert({s.m, s.n});
        }
        using MS = std::multiset<std::pair<int, int>>;
        static const MS forbidden[] = {
            MS{{0, 0}, {1, 1}, {1, 1}, {2, 2}},
            MS{{0, 1}, {1, 1}, {1, 1}, {2, 3}},
            MS{{1, 1}, {1, 1}, {1, 1}, {1, 1}},
        };
        for (const MS& bad : forbidden)
          if (multiset == bad) {
            ++sweep.forbidden_multisets;
            note("forbidden signature multiset with U=1 at sample " + std::to_string(i));
          }
      }
    }
    sweep.seconds = detail::seconds_since(t_start);
  }

  // 5: obtuse path iff every face is loadable
  add(5, "obtuse path iff all four faces take a monostable center",
      sweep.load_failures == 0 && sweep.spurious_loads == 0 && sweep.seconds < 60.0,
      std::to_string(sweep.with_path) + "/" + std::to_string(sweep.samples) +
          " with a path, no mismatches" +
          (sweep.first_problem.empty() ? "" : "; first problem: " + sweep.first_problem),
      sweep.seconds);

  // 6: the forced second count of each construction
  add(6, "monostable implies U=2, mono-unstable implies S=2", sweep.wrong_second_count == 0,
      std::to_string(sweep.wrong_second_count) + " violations", 0.0);

  // 7: exclusivity and impossible signature multisets
  add(7, "no tetrahedron has both a path and a cycle; no forbidden multiset",
      sweep.with_both == 0 && sweep.forbidden_multisets == 0,
      std::to_string(sweep.with_cycle) + " with a cycle, overlap " +
          std::to_string(sweep.with_both),
      0.0);

  // 8: cycle fixtures build, cycle-free samples never balance on one vertex
  {
    auto t_start = Clock::now();
    bool fixtures_ok = true;
    std::string detail_text;
    for (const char* name : {"cycle_case_I", "cycle_case_III"}) {
      WeightedPolyhedron fixed = fixture(name);
      std::vector<ObtuseCycle> cycles = find_obtuse_cycles(fixed.shape);
      if (cycles.empty()) {
        fixtures_ok = false;
        detail_text += std::string(name) + " has no cycle; ";
        continue;
      }
      try {
        WeightedPolyhedron wp = monounstable_weighting(fixed.shape, cycles[0]);
        EquilibriumReport r = classify(wp);
        if (r.unstable_vertices != std::vector<int>{cycles[0].vertices[0]}) {
          fixtures_ok = false;
          detail_text += std::string(name) + " balances on the wrong vertex; ";
        }
      } catch (const Error& e) {
        fixtures_ok = false;
        detail_text += std::string(name) + " failed: " + e.what() + "; ";
      }
    }
    add(8, "cycle fixtures balance on the named vertex; cycle-free never on one",
        fixtures_ok && sweep.cycle_build_failures == 0 && sweep.cycle_free_single_u == 0,
        detail_text.empty() ? "both fixtures exact, no cycle-free U=1" : detail_text,
        detail::seconds_since(t_start));
  }

  // 9: dual correspondence and double-dual identity on the criterion-4 set
  {
    auto t_start = Clock::now();
    int bad = 0;
    std::string first;
    for (std::size_t i = 0; i < random_polys.size(); ++i) {
      const WeightedPolyhedron& wp = random_polys[i];
      try {
        if (!check_prop_polar(wp)) {
          ++bad;
          if (first.empty()) first = "correspondence failed at sample " + std::to_string(i);
          continue;
        }
        auto [dual, corr] = polar_dual(wp);
        auto [back, corr2] = polar_dual(dual);
        (void)corr;
        (void)corr2;
        WeightedPolyhedron centered{
            Polyhedron([&] {
              std::vector<Vec3> moved;
              for (const Vec3& p : wp.shape.vertices()) moved.push_back(p - wp.center);
              return moved;
            }(), wp.shape.faces()),
            Vec3{Rat(0), Rat(0), Rat(0)}};
        bool same = back.shape.num_vertices() == centered.shape.num_vertices() &&
                    back.shape.num_faces() == centered.shape.num_faces();
        for (int v = 0; same && v < back.shape.num_vertices(); ++v)
          same = back.shape.vertex(v) == centered.shape.vertex(v);
        for (int f = 0; same && f < back.shape.num_faces(); ++f)
          same = detail::rotate_to_min(back.shape.face(f)) ==
                 detail::rotate_to_min(centered.shape.face(f));
        if (!same) {
          ++bad;
          if (first.empty()) first = "double dual differs at sample " + std::to_string(i);
        }
      } catch (const Error& e) {
        ++bad;
        if (first.empty())
          first = "sample " + std::to_string(i) + " threw: " + std::string(e.what());
      }
    }
    add(9, "dual swaps stable faces with unstable vertices; double dual is identity", bad == 0,
        bad == 0 ? "1000/1000 exact" : first, detail::seconds_since(t_start));
  }

  // 10: tipping on the classified fixture (random constructions were covered
  // in the shared sweep)
  {
    auto t_start = Clock::now();
    std::string why;
    bool pass = detail::tips_home(fixture_t0(), 3, why) && sweep.tip_failures == 0;
    add(10, "every tip path reaches the stable face, short and downhill", pass,
        pass ? "fixture plus " + std::to_string(4 * sweep.with_path) + " constructed weightings"
             : why,
        detail::seconds_since(t_start));
  }

  // 11: the generator covers every legal face vector up to 12
  {
    auto t_start = Clock::now();
    int built = 0;
    bool pass = true;
    std::string detail_text;
    for (int f = 4; f <= 12 && pass; ++f)
      for (int v = 4; v <= 12 && pass; ++v) {
        if (!is_legal_face_vector(f, f + v - 2, v) || (f == 4 && v == 4)) continue;
        try {
          WeightedPolyhedron wp = generate_mono_monostatic(f, v);
          FaceVector fv = face_vector(wp.shape);
          if (!verify_mono_monostatic(wp) || fv.f != f || fv.v != v) {
            pass = false;
            detail_text = "(" + std::to_string(f) + "," + std::to_string(v) + ") wrong result";
          }
          ++built;
        } catch (const Error& e) {
          pass = false;
          detail_text = "(" + std::to_string(f) + "," + std::to_string(v) + ") threw: " + e.what();
        }
      }
    bool rejected = false;
    try {
      (void)generate_mono_monostatic(4, 4);
    } catch (const Error& e) {
      rejected = e.code() == Errc::excluded_tetrahedron;
    }
    double secs = detail::seconds_since(t_start);
    pass = pass && rejected && secs < 60.0;
    add(11, "a construction for every legal face vector up to 12; (4,4) rejected", pass,
        detail_text.empty() ? std::to_string(built) + " face vectors built" : detail_text, secs);
  }

  // 12: spherical triangle classes obey the short/long constraints
  {
    auto t_start = Clock::now();
    Rng rng(seed + 2);
    int violations = 0;
    std::string first;
    std::set<std::pair<int, int>> seen;
    long draws = 0;
    auto admissible = [](int m, int n) {
      return admissible_signature(VertexSignature{m, n, 0, 0});
    };
    auto examine = [&](const SphericalTriangleClass& c) {
      int m = c.long_edges(), n = c.obtuse_angles();
      seen.insert({m, n});
      auto flag = [&](const std::string& what) {
        ++violations;
        if (first.empty()) first = what;
      };
      if (n == 0 && m != 0) flag("acute triangle with a long edge");
      if (n == 2) {
        int acute_at = -1;
        for (int k = 0; k < 3; ++k)
          if (c.angle_classes[static_cast<std::size_t>(k)] == AngleClass::Acute) acute_at = k;
        if (m != 2 || acute_at < 0 ||
            c.edge_classes[static_cast<std::size_t>(acute_at)] != ArcClass::Short)
          flag("one acute angle without exactly one short edge opposite it");
      }
      if (m == 3 && n != 3) flag("three long edges without three obtuse angles");
      if (m == 1) {
        int long_at = -1;
        for (int k = 0; k < 3; ++k)
          if (c.edge_classes[static_cast<std::size_t>(k)] == ArcClass::Long) long_at = k;
        if (n != 1 || c.angle_classes[static_cast<std::size_t>(long_at)] != AngleClass::Obtuse)
          flag("one long edge without exactly one obtuse angle opposite it");
      }
      if (m == 0 && n > 1) flag("all edges short with two or more obtuse angles");
      if (!admissible(m, n)) flag("inadmissible class pair (" + std::to_string(m) + "," +
                                  std::to_string(n) + ")");
    };
    for (; draws < 100000; ++draws) {
      auto [a, b, c] = random_direction_triple(rng);
      examine(classify_spherical_triangle(a, b, c));
    }
    while (seen.size() < 7 && draws < 1000000) {
      auto [a, b, c] = random_direction_triple(rng);
      examine(classify_spherical_triangle(a, b, c));
      ++draws;
    }
    bool pass = violations == 0 && seen.size() == 7;
    add(12, "spherical triangle classes: no violations, all seven pairs seen", pass,
        violations == 0 ? std::to_string(seen.size()) + "/7 pairs in " + std::to_string(draws) +
                              " draws"
                        : first,
        detail::seconds_since(t_start));
  }

  return results;
}

}  // namespace polystat
