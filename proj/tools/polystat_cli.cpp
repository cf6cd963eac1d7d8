// Command-line front end: analysis, construction, dualization, tipping,
// generation, and the reproduction suite, all emitting JSON on stdout.
//
// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polystat/polystat.hpp"

namespace {

using polystat::Json;

constexpr const char* kFixturePrefix = "fixtures:";

polystat::WeightedPolyhedron load_input(const std::string& ref) {
  if (ref.rfind(kFixturePrefix, 0) == 0)
    return polystat::fixture(ref.substr(std::string(kFixturePrefix).size()));
  std::ifstream in(ref);
  if (!in)
    polystat::fail(polystat::Errc::schema_error, "cannot open input file '" + ref + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    polystat::fail(polystat::Errc::schema_error, "malformed JSON in '" + ref + "': " + e.what());
  }
  return polystat::parse(j);
}

void emit(const Json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

Json tip_path_to_json(const polystat::WeightedPolyhedron& wp, const polystat::TipPath& path) {
  Json steps = Json::array();
  for (const polystat::TipStep& s : path.steps) {
    const polystat::Edge& e = wp.shape.edge(s.exit_edge);
    steps.push_back(Json{{"from", s.from_face}, {"edge", Json::array({e.u, e.v})},
                         {"to", s.to_face}});
  }
  return Json{{"steps", std::move(steps)}, {"terminal", path.terminal_face}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equilibrium analysis of weighted convex polyhedra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  bool pretty = false, json_flag = false;
  app.add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_flag("--json", json_flag, "Compact JSON output (default)");

  std::string input, center_name;
  int face = -1, cycle_index = 0, start_face = -1;
  bool tip_all = false;
  int gen_faces = 0, gen_vertices = 0;
  std::string out_file;

  CLI::App* analyze = app.add_subcommand("analyze", "Classify the equilibria of an input");
  analyze->add_option("input", input, "fixtures:<name> or a JSON file")->required();
  analyze->add_option("--center", center_name, "Use a named center of the nine-center fixture");

  CLI::App* signatures =
      app.add_subcommand("signatures", "Per-vertex [m,n] and per-edge dihedral classes");
  signatures->add_option("input", input, "fixtures:<name> or a JSON file")->required();

  CLI::App* opath = app.add_subcommand("obtuse-path", "List the obtuse paths of a tetrahedron");
  opath->add_option("input", input, "fixtures:<name> or a JSON file")->required();

  CLI::App* ocycle =
      app.add_subcommand("obtuse-cycle", "List the obtuse cycles of a tetrahedron");
  ocycle->add_option("input", input, "fixtures:<name> or a JSON file")->required();

  CLI::App* loadm = app.add_subcommand(
      "load-monostable", "Construct a center making one face the only stable one");
  loadm->add_option("input", input, "fixtures:<name> or a JSON file")->required();
  loadm->add_option("--face", face, "Target face id")->required();

  CLI::App* loadu = app.add_subcommand(
      "load-monounstable", "Construct a center balancing on one vertex only");
  loadu->add_option("input", input, "fixtures:<name> or a JSON file")->required();
  loadu->add_option("--cycle", cycle_index, "Index into the cycle list")
      ->capture_default_str();

  CLI::App* dual = app.add_subcommand("dual", "Polar dual about the center");
  dual->add_option("input", input, "fixtures:<name> or a JSON file")->required();

  CLI::App* tip = app.add_subcommand("tip", "Quasi-static tipping from a resting face");
  tip->add_option("input", input, "fixtures:<name> or a JSON file")->required();
  CLI::Option* opt_start = tip->add_option("--start-face", start_face, "Starting face id");
  tip->add_flag("--all", tip_all, "Tip from every face")->excludes(opt_start);

  CLI::App* generate =
      app.add_subcommand("generate", "Build a shape with one stable and one unstable point");
  generate->add_option("--faces", gen_faces, "Face count")->required();
  generate->add_option("--vertices", gen_vertices, "Vertex count")->required();
  generate->add_option("--out", out_file, "Also write the result to this file");

  CLI::App* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      if (!center_name.empty()) {
        bool found = false;
        for (const auto& [name, point] : polystat::nine_center_points())
          if (name == center_name) {
            wp.center = point;
            found = true;
          }
        if (!found)
          polystat::fail(polystat::Errc::schema_error,
                         "unknown center '" + center_name + "'");
        if (!polystat::is_interior(wp.shape, wp.center))
          polystat::fail(polystat::Errc::center_not_interior,
                         "named center is not interior to this shape");
      }
      polystat::EquilibriumReport r = polystat::classify(wp);
      polystat::FaceVector fv = polystat::face_vector(wp.shape);
      Json out = polystat::report_to_json(wp.shape, r);
      out["face_vector"] = Json::array({fv.f, fv.e, fv.v});
      emit(out, pretty);
    } else if (signatures->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      Json vertices = Json::array();
      for (int v = 0; v < wp.shape.num_vertices(); ++v) {
        polystat::VertexSignature s = polystat::vertex_signature(wp.shape, v);
        vertices.push_back(Json{{"vertex", v},
                                {"m", s.m},
                                {"n", s.n},
                                {"right_face_angles", s.right_face_angles},
                                {"right_dihedrals", s.right_dihedrals},
                                {"admissible", polystat::admissible_signature(s)}});
      }
      Json edges = Json::array();
      for (int e = 0; e < wp.shape.num_edges(); ++e) {
        const polystat::Edge& edge = wp.shape.edge(e);
        edges.push_back(Json{{"edge", Json::array({edge.u, edge.v})},
                             {"dihedral", polystat::to_string(
                                              polystat::dihedral_sign(wp.shape, e))}});
      }
      emit(Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}, pretty);
    } else if (opath->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      Json paths = Json::array();
      for (const polystat::ObtusePath& p : polystat::find_obtuse_paths(wp.shape))
        paths.push_back(Json(p.vertices));
      emit(Json{{"paths", std::move(paths)}}, pretty);
    } else if (ocycle->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      Json cycles = Json::array();
      for (const polystat::ObtuseCycle& c : polystat::find_obtuse_cycles(wp.shape))
        cycles.push_back(Json(c.vertices));
      emit(Json{{"cycles", std::move(cycles)}}, pretty);
    } else if (loadm->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      polystat::LoadingRegion region = polystat::loading_region(wp.shape, face);
      polystat::WeightedPolyhedron loaded = polystat::monostable_weighting(wp.shape, face);
      polystat::EquilibriumReport r = polystat::classify(loaded);
      Json corners = Json::array();
      for (const polystat::Vec3& c : region.corners)
        corners.push_back(polystat::vec3_to_json(c));
      emit(Json{{"region", std::move(corners)},
                {"weighted", polystat::serialize(loaded)},
                {"report", polystat::report_to_json(loaded.shape, r)}},
           pretty);
    } else if (loadu->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      std::vector<polystat::ObtuseCycle> cycles = polystat::find_obtuse_cycles(wp.shape);
      if (cycles.empty())
        polystat::fail(polystat::Errc::no_obtuse_cycle, "the input has no obtuse cycle");
      if (cycle_index < 0 || cycle_index >= static_cast<int>(cycles.size()))
        polystat::fail(polystat::Errc::schema_error,
                       "cycle index out of range (have " + std::to_string(cycles.size()) + ")");
      polystat::WeightedPolyhedron loaded =
          polystat::monounstable_weighting(wp.shape, cycles[static_cast<std::size_t>(cycle_index)]);
      polystat::EquilibriumReport r = polystat::classify(loaded);
      emit(Json{{"cycle", Json(cycles[static_cast<std::size_t>(cycle_index)].vertices)},
                {"weighted", polystat::serialize(loaded)},
                {"report", polystat::report_to_json(loaded.shape, r)}},
           pretty);
    } else if (dual->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      auto [dualized, corr] = polystat::polar_dual(wp);
      emit(Json{{"dual", polystat::serialize(dualized)},
                {"face_to_vertex", corr.face_to_vertex},
                {"vertex_to_face", corr.vertex_to_face}},
           pretty);
    } else if (tip->parsed()) {
      polystat::WeightedPolyhedron wp = load_input(input);
      if (start_face < 0 && !tip_all) tip_all = true;
      Json paths = Json::array();
      if (tip_all) {
        for (int f = 0; f < wp.shape.num_faces(); ++f) {
          Json one = tip_path_to_json(wp, polystat::tip_path(wp, f));
          one["start"] = f;
          paths.push_back(std::move(one));
        }
      } else {
        Json one = tip_path_to_json(wp, polystat::tip_path(wp, start_face));
        one["start"] = start_face;
        paths.push_back(std::move(one));
      }
      emit(Json{{"paths", std::move(paths)}}, pretty);
    } else if (generate->parsed()) {
      std::vector<std::string> trace;
      polystat::WeightedPolyhedron wp =
          polystat::generate_mono_monostatic(gen_faces, gen_vertices, &trace);
      polystat::EquilibriumReport r = polystat::classify(wp);
      polystat::FaceVector fv = polystat::face_vector(wp.shape);
      Json out{{"weighted", polystat::serialize(wp)},
               {"face_vector", Json::array({fv.f, fv.e, fv.v})},
               {"trace", trace},
               {"report", polystat::report_to_json(wp.shape, r)}};
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f)
          polystat::fail(polystat::Errc::schema_error,
                         "cannot write output file '" + out_file + "'");
        f << polystat::serialize(wp).dump(2) << "\n";
      }
      emit(out, pretty);
    } else if (verify->parsed()) {
      std::vector<polystat::CriterionResult> results = polystat::run_acceptance(seed);
      Json arr = Json::array();
      bool all = true;
      for (const polystat::CriterionResult& r : results) {
        arr.push_back(Json{{"id", r.id},
                           {"label", r.label},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        all = all && r.pass;
      }
      emit(Json{{"criteria", std::move(arr)}, {"all_pass", all}}, pretty);
      return all ? 0 : 1;
    }
  } catch (const polystat::Error& e) {
    emit(Json{{"error", Json{{"code", e.name()}, {"message", e.what()}}}}, pretty);
    return 1;
  }
  return 0;
}
