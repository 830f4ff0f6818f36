#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knots/pd_code.hpp"

namespace torsionlab {

struct AcceptanceOptions {
  std::string fixtures_dir;         // empty: compiled-in default
  int jobs = 1;
  bool corrupt_sign_table = false;  // negative control for the sign oracle
  std::uint64_t seed = 20240611;
  std::size_t random_complexes = 120;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// Directory with the shipped PD fixtures: $TORSIONLAB_FIXTURES, else the
/// path baked in at build time.
std::string default_fixtures_dir();

/// Reads <dir>/<name>.pd. MalformedCode when the file is missing.
LinkDiagram load_fixture(const std::string& dir, const std::string& name);

/// Knot fixtures covered by the pipeline criteria.
const std::vector<std::string>& knot_fixture_names();

}  // namespace torsionlab
