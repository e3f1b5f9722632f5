#include "dpgit/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "dpgit/catalog.hpp"
#include "dpgit/deform.hpp"
#include "dpgit/document.hpp"
#include "dpgit/enumer.hpp"
#include "dpgit/errors.hpp"
#include "dpgit/gitstab.hpp"
#include "dpgit/model.hpp"
#include "dpgit/moduli.hpp"
#include "dpgit/torus.hpp"

namespace dpgit {

using nlohmann::json;

namespace {

// Bad command-line arguments; reported like a parse error without a position.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long int_arg(const std::vector<std::string>& args, size_t i, const char* what) {
  if (i >= args.size()) throw ArgumentError(std::string("missing argument: ") + what);
  const std::string& s = args[i];
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ArgumentError(std::string("not an integer for ") + what + ": '" + s + "'");
  return v;
}

json strings(const std::vector<std::string>& v) { return json(v); }

json type_strings(const std::vector<SingularityType>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(t.to_string());
  return a;
}

json field_string(const FieldElement& c) { return c.to_string(); }

json profile_json(const SurfaceProfile& p) {
  json pts = json::array();
  for (const auto& sp : p.singular_points) {
    json coords = json::array();
    for (const auto& c : sp.point) coords.push_back(field_string(c));
    json e{{"coords", coords}, {"cluster_size", sp.cluster_size}, {"type", sp.type.to_string()}};
    if (!sp.note.empty()) e["note"] = sp.note;
    pts.push_back(e);
  }
  return json{{"ambient", p.ambient}, {"degree", p.degree}, {"normal", p.is_normal}, {"profile", strings(p.type_strings())},
              {"points", pts}};
}

json stability_json(const StabilityResult& r) {
  json j{{"class", to_string(r.cls)}, {"boundary", r.boundary}, {"notes", r.notes}};
  return j;
}

json ambient_json(const InputDocument& doc) {
  if (!doc.ambient.vars) return nullptr;
  return json{{"weighted_projective_space", doc.ambient.to_string()},
              {"field", doc.ambient.gaussian ? "Q(i)" : "Q"},
              {"vars", *doc.ambient.vars}};
}

struct Built {
  json result;
  json certificates;
};

Built classify_singularities(const InputDocument& doc) {
  const SurfaceModel m = recognize(doc);
  json r = profile_json(model_profile(m, TruncationPolicy::from_env()));
  r["model"] = to_string(m.kind);
  return {r, nullptr};
}

Built def_stability(const InputDocument& doc, const std::string& space_name) {
  const DefSpace space = DefSpace::by_name(space_name);
  if (!doc.point) throw MathError("task " + *doc.task + " needs a point statement with the coordinates");
  const DefVerdict v = def_polystability(space, *doc.point);
  json r = stability_json(v.result);
  r["classifier"] = "def-" + space_name;
  r["tabulated"] = v.tabulated;
  r["coordinates"] = space.coordinate_names();
  json cert = nullptr;
  if (v.result.certificate) {
    Support s;
    const Support all = space.all_weights();
    for (size_t i = 0; i < doc.point->size(); ++i)
      if (!(*doc.point)[i].is_zero()) s.push_back(all[i]);
    cert = json{{"one_ps", *v.result.certificate}, {"verified", verify_certificate(s, *v.result.certificate)}};
  }
  return {r, cert};
}

Built git_stability(const InputDocument& doc) {
  if (doc.task && doc.task->rfind("def-", 0) == 0) return def_stability(doc, doc.task->substr(4));
  const SurfaceModel m = recognize(doc);
  const TruncationPolicy policy = TruncationPolicy::from_env();
  std::optional<SurfaceProfile> prof;
  if (m.kind != ModelKind::BinaryForm) prof = model_profile(m, policy);
  const StabilityReport s = model_stability(m, prof ? &*prof : nullptr, policy);
  json r = stability_json(s.result);
  r["classifier"] = s.classifier;
  r["model"] = to_string(m.kind);
  if (prof) r["profile"] = prof->type_strings();
  if (m.kind == ModelKind::BinaryForm) {
    json mult = json::array();
    for (int k : binary_root_multiplicities(m.form, m.degree)) mult.push_back(k);
    r["root_multiplicities"] = mult;
  }
  json cert = nullptr;
  if (s.result.certificate) cert = json{{"one_ps", *s.result.certificate}, {"coordinates", "diagonal torus on the declared variables"}};
  return {r, cert};
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to_string(q));
  return a;
}

Built moduli_point(const InputDocument& doc) {
  if (doc.point && doc.polys.empty() && doc.matrices.empty()) {
    std::vector<Rational> z;
    for (const auto& c : *doc.point) {
      if (!c.is_rational()) throw MathError("moduli coordinates must be rational");
      z.push_back(c.rational());
    }
    if (z.size() == 3) {
      auto p = ModuliPoint123::canonical({z[0], z[1], z[2]});
      return {json{{"point", rationals({p.z[0], p.z[1], p.z[2]})},
                   {"on_divisor_deg4", divisor_check_deg4(p)},
                   {"divisor_constant", rational_to_string(quintic_divisor_constant())}},
              nullptr};
    }
    if (z.size() == 5) {
      if (std::all_of(z.begin(), z.end(), [](const Rational& q) { return sgn(q) == 0; }))
        throw MathError("the zero vector is not a point");
      std::array<Rational, 5> a{z[0], z[1], z[2], z[3], z[4]};
      return {json{{"point", rationals(z)}, {"on_divisor_deg3", divisor_check_deg3(a)}}, nullptr};
    }
    throw MathError("a moduli point has 3 coordinates (P(1,2,3)) or 5 (cubic invariants)");
  }
  MultiPoly q;
  const SurfaceModel m = recognize(doc);
  if (m.kind == ModelKind::Pencil) q = pencil_to_quintic(m.pencil);
  else if (m.kind == ModelKind::BinaryForm && m.degree == 5) q = m.form;
  else throw MathError("moduli-point needs a pencil of quadrics in P4 or a binary quintic");
  const QuinticInvariants inv = quintic_invariants(q);
  const bool null = sgn(inv.I4) == 0 && sgn(inv.I8) == 0 && sgn(inv.I12) == 0;
  json r{{"quintic", q.to_string()},
         {"invariants", {{"I4", rational_to_string(inv.I4)}, {"I8", rational_to_string(inv.I8)}, {"I12", rational_to_string(inv.I12)}}},
         {"nullform", null},
         {"divisor_constant", rational_to_string(quintic_divisor_constant())}};
  if (null) {
    r["point"] = nullptr;
    r["on_divisor_deg4"] = nullptr;
  } else {
    r["point"] = rationals({inv.point.z[0], inv.point.z[1], inv.point.z[2]});
    r["on_divisor_deg4"] = divisor_check_deg4(inv.point);
  }
  return {r, nullptr};
}

Built degenerate(const InputDocument& doc) {
  if (doc.task && *doc.task == "blowup") {
    const MultiPoly* g4 = doc.find_poly("g4");
    const MultiPoly* g6 = doc.find_poly("g6");
    if (!g4 || !g6) throw MathError("task blowup needs polys g4 and g6");
    if (!doc.point || doc.point->size() != 1 || !(*doc.point)[0].is_rational())
      throw MathError("task blowup needs 'point t' with one nonzero rational t");
    const BlowupResult b = blowup_substitution(*g4, *g6, (*doc.point)[0].rational());
    const BlowupResult lim = blowup_limit(*g4, *g6);
    return {json{{"f4", b.f4.to_string()},
                 {"f6", b.f6.to_string()},
                 {"identity_verified", true},
                 {"limit_t_to_0", {{"f4", lim.f4.to_string()}, {"f6", lim.f6.to_string()}}}},
            nullptr};
  }
  if (!doc.lambda) throw MathError("degenerate needs a lambda statement");
  if (doc.polys.size() != 1) throw MathError("degenerate needs exactly one polynomial");
  const MultiPoly& p = doc.polys.front().poly;
  if (doc.lambda->size() != static_cast<size_t>(p.nvars()))
    throw MathError("lambda has " + std::to_string(doc.lambda->size()) + " entries for " + std::to_string(p.nvars()) +
                    " variables");
  if (p.is_zero()) throw MathError("zero polynomial");
  const DegenerationLimit lim = degeneration_limit(p, WeightSystem{*doc.lambda});
  return {json{{"limit", lim.limit.to_string()}, {"weight", lim.weight}, {"lambda", *doc.lambda}}, nullptr};
}

json hj_json(const HJString& h) {
  return json{{"n", h.n}, {"a", h.a}, {"expansion", h.expansion}, {"string", h.string}, {"reversed", h.reversed}};
}

Built run_args(const std::string& command, const std::vector<std::string>& args) {
  if (command == "tsing") {
    const long n = int_arg(args, 0, "n"), a = int_arg(args, 1, "a");
    if (n < 2 || std::gcd(n, a) != 1) throw MathError("need n >= 2 and gcd(n, a) = 1");
    const long ac = canonical_a(n, ((a % n) + n) % n);
    json r{{"n", n}, {"a", ac}, {"type", SingularityType::cyclic(static_cast<int>(n), static_cast<int>(ac)).to_string()}};
    if (auto t = is_t_singularity(n, ac)) {
      r["t_singularity"] = true;
      r["d"] = t->d;
      r["n0"] = t->n;
      r["a0"] = t->a;
    } else {
      r["t_singularity"] = false;
    }
    return {r, nullptr};
  }
  if (command == "hj") {
    const long n = int_arg(args, 0, "n"), a = int_arg(args, 1, "a");
    if (n < 2 || std::gcd(n, a) != 1) throw MathError("need n >= 2 and gcd(n, a) = 1");
    return {hj_json(hj_expansion(n, a)), nullptr};
  }
  if (command == "markov") {
    const long bound = int_arg(args, 0, "bound");
    if (bound < 1) throw MathError("bound must be positive");
    json sols = json::array();
    for (const auto& t : markov_solutions(bound)) sols.push_back(json{t[0], t[1], t[2]});
    return {json{{"bound", bound}, {"solutions", sols}}, nullptr};
  }
  if (command == "menu") {
    const long d = int_arg(args, 0, "degree");
    if (d < 1 || d > 9) throw MathError("degree must lie in 1..9");
    return {type_strings(gh_menu(static_cast<int>(d))), nullptr};
  }
  if (command == "noether") {
    const long d = int_arg(args, 0, "degree"), rho = int_arg(args, 1, "picard rank");
    std::vector<int> mu;
    for (size_t i = 2; i < args.size(); ++i) {
      const std::string& s = args[i];
      if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) {
        mu.push_back(static_cast<int>(int_arg(args, i, "milnor number")));
        continue;
      }
      SingularityType t;
      try {
        t = SingularityType::parse(s);
      } catch (const std::exception&) {
        throw ArgumentError("not a Milnor number or singularity type: '" + s + "'");
      }
      auto m = t.milnor();
      if (!m) throw MathError(s + " has no Milnor number in this sense");
      mu.push_back(*m);
    }
    return {json{{"degree", d}, {"picard_rank", rho}, {"milnor", mu},
                 {"ok", noether_check(static_cast<int>(d), static_cast<int>(rho), mu)}},
            nullptr};
  }
  if (command == "catalog-verify") {
    std::vector<SurfaceFixture> fs;
    if (args.empty()) fs = fixtures();
    for (const auto& a : args) fs.push_back(fixture(a));
    json list = json::array();
    bool all_ok = true;
    for (const auto& r : verify_all(fs)) {
      all_ok = all_ok && r.ok;
      json e{{"name", r.name}, {"ok", r.ok}, {"profile", r.profile}, {"class", to_string(r.stability)},
             {"classifier", r.classifier}, {"mismatches", r.mismatches}};
      const auto& f = fixture(r.name);
      if (f.parametrization) e["parametrization"] = verify_parametrization(f.name);
      list.push_back(e);
    }
    return {json{{"all_ok", all_ok}, {"fixtures", list}}, nullptr};
  }
  throw ArgumentError("unknown command '" + command + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify-singularities", "git-stability", "moduli-point", "degenerate", "tsing",
                                              "hj", "markov", "menu", "noether", "catalog-verify"};
  return names;
}

bool command_reads_file(const std::string& c) {
  return c == "classify-singularities" || c == "git-stability" || c == "moduli-point" || c == "degenerate";
}

CommandOutcome run_command(const std::string& command, const std::vector<std::string>& args, const std::string& text) {
  const auto t0 = std::chrono::steady_clock::now();
  CommandOutcome out;
  json& j = out.report;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input_echo"] = command_reads_file(command) ? json(text) : json(args);
  j["ambient"] = nullptr;
  try {
    Built b;
    if (command_reads_file(command)) {
      const InputDocument doc = parse_document(text);
      j["input_echo"] = print_document(doc);
      j["ambient"] = ambient_json(doc);
      if (command == "classify-singularities") b = classify_singularities(doc);
      else if (command == "git-stability") b = git_stability(doc);
      else if (command == "moduli-point") b = moduli_point(doc);
      else b = degenerate(doc);
    } else {
      b = run_args(command, args);
    }
    j["result"] = b.result;
    if (!b.certificates.is_null()) j["certificates"] = b.certificates;
    out.exit_code = 0;
  } catch (const ParseError& e) {
    j["error"] = json{{"kind", "ParseError"}, {"message", e.bare_message()}, {"line", e.line()}, {"column", e.column()}};
    out.exit_code = 1;
  } catch (const ArgumentError& e) {
    j["error"] = json{{"kind", "ParseError"}, {"message", e.what()}};
    out.exit_code = 1;
  } catch (const TruncationError& e) {
    j["error"] = json{{"kind", "TruncationError"}, {"message", e.what()}};
    out.exit_code = 2;
  } catch (const MathError& e) {
    j["error"] = json{{"kind", "MathError"}, {"message", e.what()}};
    out.exit_code = 2;
  } catch (const std::exception& e) {
    j["error"] = json{{"kind", "InternalError"}, {"message", e.what()}};
    out.exit_code = 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  j["timings"] = json{{"total_ms", ms}};
  return out;
}

CommandOutcome io_error(const std::string& command, const std::string& message) {
  CommandOutcome out;
  out.report = json{{"schema_version", kSchemaVersion},
                    {"command", command},
                    {"input_echo", nullptr},
                    {"ambient", nullptr},
                    {"error", {{"kind", "IOError"}, {"message", message}}},
                    {"timings", {{"total_ms", 0.0}}}};
  out.exit_code = 1;
  return out;
}

std::string render(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace dpgit
