#pragma once
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dpgit/document.hpp"
#include "dpgit/types.hpp"

namespace dpgit {

// Quotient map from a source space into the fixture's ambient.
struct Parametrization {
  VarList source_vars;
  std::vector<std::string> images;  // one per ambient variable, parsed in the source ring
  std::vector<long> group_weights;  // cyclic action on the source, empty when not recorded
  long group_order = 0;
};

struct SurfaceFixture {
  std::string name;
  std::string file;                          // under <data>/fixtures
  std::vector<std::string> expected_profile;  // sorted type strings; {"non-normal"} for non-normal surfaces
  Stability expected_stability = Stability::Stable;
  std::string classifier;                     // model classifier, or "def-X1T" / "def-X1e"
  int degree = 0;
  std::optional<Parametrization> parametrization;
};

struct FixtureReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> mismatches;
  std::vector<std::string> profile;
  Stability stability = Stability::Stable;
  std::string classifier;
  double seconds = 0;
};

std::filesystem::path data_dir();  // DPGIT_DATA_DIR env, else the build-time source data directory
const std::vector<SurfaceFixture>& fixtures();
const SurfaceFixture& fixture(const std::string& name);
InputDocument load_fixture_document(const SurfaceFixture& f);

FixtureReport verify_fixture(const SurfaceFixture& f);
FixtureReport verify_fixture(const std::string& name);
bool verify_parametrization(const std::string& name);

std::vector<FixtureReport> verify_all(const std::vector<SurfaceFixture>& fs);
std::vector<FixtureReport> verify_all_serial(const std::vector<SurfaceFixture>& fs);

}  // namespace dpgit
