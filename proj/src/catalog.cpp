#include "dpgit/catalog.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dpgit/deform.hpp"
#include "dpgit/errors.hpp"
#include "dpgit/model.hpp"

#ifndef DPGIT_DATA_DIR
#define DPGIT_DATA_DIR "data"
#endif

namespace dpgit {

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<SurfaceFixture> build_fixtures() {
  using S = Stability;
  std::vector<SurfaceFixture> fs;
  auto add = [&](std::string name, std::string file, std::vector<std::string> prof, S st, std::string cls, int deg,
                 std::optional<Parametrization> par = std::nullopt) {
    fs.push_back({std::move(name), std::move(file), sorted(std::move(prof)), st, std::move(cls), deg, std::move(par)});
  };
  add("X4T", "X4T.dp", {"A1", "A1", "A1", "A1"}, S::PolystableNotStable, "quartic-dp", 4);
  add("X3T", "X3T.dp", {"A2", "A2", "A2"}, S::PolystableNotStable, "cubic", 3,
      Parametrization{{"z1", "z2", "z3"}, {"z1*z2*z3", "z1^3", "z2^3", "z3^3"}, {0, 1, -1}, 3});
  add("X3C", "cayley.dp", {"A1", "A1", "A1", "A1"}, S::Stable, "cubic", 3);
  add("fermat-cubic", "fermat_cubic.dp", {}, S::Stable, "cubic", 3);
  add("X2T", "X2T.dp", {"A3", "A3", "1/4(1,1)", "1/4(1,1)"}, S::PolystableNotStable, "binary-octic", 2,
      Parametrization{{"z1", "z2", "w1", "w2"}, {"z1*w1", "z2*w2", "z1^4*w2^4", "z2^4*w1^4"}, {1, 0, -1, 0}, 4});
  add("X2-cateye", "X2_cateye.dp", {"A3", "A3"}, S::PolystableNotStable, "plane-quartic", 2);
  add("X2-ox", "X2_ox.dp", {"A1", "A3", "A3"}, S::PolystableNotStable, "plane-quartic", 2);
  add("X2-generic", "X2_generic.dp", {"A3", "A3"}, S::PolystableNotStable, "plane-quartic", 2);
  add("X2-infinity", "X2_infinity.dp", {"A1", "A3", "A3"}, S::PolystableNotStable, "plane-quartic", 2);
  add("X1T", "X1T.dp", {"A8", "1/9(1,2)", "1/9(1,2)"}, S::PolystableNotStable, "def-X1T", 1,
      Parametrization{{"z1", "z2", "z3"}, {"z1", "z2*z3", "z2^9", "z3^9"}, {0, 1, -1}, 9});
  add("X1e", "X1e.dp", {"A7", "1/8(1,3)"}, S::PolystableNotStable, "def-X1e", 1);
  add("X1-infinity", "X1_infinity.dp", {"D4", "D4", "1/4(1,1)"}, S::PolystableNotStable, "exceptional-E", 1);
  add("p0", "p0.dp", {"non-normal"}, S::PolystableNotStable, "sextic-dp1", 1);
  return fs;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw MathError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("DPGIT_DATA_DIR"); env && *env) return env;
  return DPGIT_DATA_DIR;
}

const std::vector<SurfaceFixture>& fixtures() {
  static const std::vector<SurfaceFixture> fs = build_fixtures();
  return fs;
}

const SurfaceFixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw MathError("unknown fixture '" + name + "'");
}

InputDocument load_fixture_document(const SurfaceFixture& f) {
  return parse_document(read_file(data_dir() / "fixtures" / f.file));
}

FixtureReport verify_fixture(const SurfaceFixture& f) {
  const auto t0 = std::chrono::steady_clock::now();
  FixtureReport r;
  r.name = f.name;
  try {
    const InputDocument doc = load_fixture_document(f);
    const SurfaceModel m = recognize(doc);
    const TruncationPolicy policy = TruncationPolicy::from_env();
    const SurfaceProfile prof = model_profile(m, policy);
    r.profile = sorted(prof.type_strings());
    if (r.profile != f.expected_profile) {
      std::string got, want;
      for (const auto& s : r.profile) got += s + " ";
      for (const auto& s : f.expected_profile) want += s + " ";
      r.mismatches.push_back("profile: got [" + got + "] expected [" + want + "]");
    }
    if (prof.degree != f.degree)
      r.mismatches.push_back("degree: got " + std::to_string(prof.degree) + " expected " + std::to_string(f.degree));
    if (f.classifier.rfind("def-", 0) == 0) {
      // Torus-fixed point of the local deformation space.
      const DefSpace space = DefSpace::by_name(f.classifier.substr(4));
      std::vector<FieldElement> zero(space.dimension(), FieldElement(0));
      r.stability = def_polystability(space, zero).result.cls;
      r.classifier = f.classifier;
    } else {
      const StabilityReport s = model_stability(m, &prof, policy);
      r.stability = s.result.cls;
      r.classifier = s.classifier;
    }
    if (r.classifier != f.classifier)
      r.mismatches.push_back("classifier: got " + r.classifier + " expected " + f.classifier);
    if (r.stability != f.expected_stability)
      r.mismatches.push_back("stability: got " + to_string(r.stability) + " expected " + to_string(f.expected_stability));
    if (f.parametrization && !verify_parametrization(f.name)) r.mismatches.push_back("parametrization does not vanish");
  } catch (const std::exception& e) {
    r.mismatches.push_back(std::string("error: ") + e.what());
  }
  r.ok = r.mismatches.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

FixtureReport verify_fixture(const std::string& name) { return verify_fixture(fixture(name)); }

bool verify_parametrization(const std::string& name) {
  const SurfaceFixture& f = fixture(name);
  if (!f.parametrization) throw MathError("fixture '" + name + "' has no parametrization");
  const Parametrization& par = *f.parametrization;
  const InputDocument doc = load_fixture_document(f);
  if (doc.polys.size() != 1) throw MathError("parametrized fixtures carry one equation");
  const MultiPoly& eq = doc.polys.front().poly;
  if (par.images.size() != static_cast<size_t>(eq.nvars())) throw MathError("image count differs from the ambient");
  std::string src = "ring P(";
  for (size_t i = 0; i < par.source_vars.size(); ++i) src += (i ? ",1" : "1");
  src += ") vars ";
  for (size_t i = 0; i < par.source_vars.size(); ++i) src += (i ? "," : "") + par.source_vars[i];
  for (const auto& im : par.images) src += "; poly " + im;
  const InputDocument sdoc = parse_document(src);
  std::vector<MultiPoly> images;
  for (const auto& p : sdoc.polys) images.push_back(p.poly);
  // Image degrees must be proportional to the ambient weights.
  const auto& w = doc.ambient.weights;
  for (size_t i = 0; i < images.size(); ++i) {
    const auto wd = weighted_degree(images[i], WeightSystem{std::vector<long>(par.source_vars.size(), 1)});
    if (!wd.homogeneous) return false;
    if (wd.degrees.front() * w[0] != images[0].total_degree() * w[i]) return false;
  }
  return substitute(eq, images).is_zero();
}

std::vector<FixtureReport> verify_all(const std::vector<SurfaceFixture>& fs) {
  std::vector<FixtureReport> out(fs.size());
  const long n = static_cast<long>(fs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[i] = verify_fixture(fs[i]);
  return out;
}

std::vector<FixtureReport> verify_all_serial(const std::vector<SurfaceFixture>& fs) {
  std::vector<FixtureReport> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(verify_fixture(f));
  return out;
}

}  // namespace dpgit
