#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polystat {

// Domain error codes. Every throwing operation in the library reports one of
// these so callers (and the CLI) can surface structured failures.
enum class Errc {
  degenerate_input,
  parallel_line,
  degenerate_tetrahedron,
  not_incident,
  not_a_tetrahedron,
  degenerate_directions,
  schema_error,
  validation_failed,
  center_not_interior,
  no_obtuse_path,
  no_obtuse_cycle,
  degenerate_cut,
  verification_failed,
  search_exhausted,
  theorem_violation,
  degenerate_classification,
  vertex_exit,
  cycle_detected,
  degenerate_exit,
  all_faces_triangular,
  bend_failed,
  general_position_violated,
  illegal_face_vector,
  excluded_tetrahedron,
  construction_failed,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::parallel_line: return "ParallelLine";
    case Errc::degenerate_tetrahedron: return "DegenerateTetrahedron";
    case Errc::not_incident: return "NotIncident";
    case Errc::not_a_tetrahedron: return "NotATetrahedron";
    case Errc::degenerate_directions: return "DegenerateDirections";
    case Errc::schema_error: return "SchemaError";
    case Errc::validation_failed: return "ValidationFailed";
    case Errc::center_not_interior: return "CenterNotInterior";
    case Errc::no_obtuse_path: return "NoObtusePath";
    case Errc::no_obtuse_cycle: return "NoObtuseCycle";
    case Errc::degenerate_cut: return "DegenerateCut";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::theorem_violation: return "TheoremViolation";
    case Errc::degenerate_classification: return "DegenerateClassification";
    case Errc::vertex_exit: return "VertexExitEncountered";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::degenerate_exit: return "DegenerateExit";
    case Errc::all_faces_triangular: return "AllFacesTriangular";
    case Errc::bend_failed: return "BendFailed";
    case Errc::general_position_violated: return "GeneralPositionViolated";
    case Errc::illegal_face_vector: return "IllegalFaceVector";
    case Errc::excluded_tetrahedron: return "ExcludedTetrahedron";
    case Errc::construction_failed: return "ConstructionFailed";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace polystat
