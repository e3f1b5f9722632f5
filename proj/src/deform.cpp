#include "dpgit/deform.hpp"

#include "dpgit/errors.hpp"

namespace dpgit {

size_t DefSpace::dimension() const {
  size_t n = 0;
  for (const auto& b : blocks) n += b.coords.size();
  return n;
}

Support DefSpace::all_weights() const {
  Support s;
  for (const auto& b : blocks) s.insert(s.end(), b.weights.begin(), b.weights.end());
  return s;
}

std::vector<std::string> DefSpace::coordinate_names() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.insert(out.end(), b.coords.begin(), b.coords.end());
  return out;
}

DefSpace DefSpace::X1T() {
  DefSpace s;
  s.name = "X1T";
  s.torus_rank = 2;
  s.blocks = {{"Def1", {"v1"}, {{1, -1}}}, {"Def2", {"v2"}, {{-3, 6}}}, {"Def3", {"v3"}, {{-3, -3}}}};
  return s;
}

DefSpace DefSpace::X1e() {
  // w^2 = z^2x^2 + zy^4 + a1 z^3 + a2 z^2y^2 + sum b_i x^i y^(6-i) under (x,y,z,w) -> (t^2 x, t y, z, t^2 w):
  // a coefficient's weight is its monomial's weight minus 4.
  DefSpace s;
  s.name = "X1e";
  s.torus_rank = 1;
  DefBlock a{"Def1", {"a1", "a2"}, {{-4}, {-2}}};
  DefBlock b{"Def2", {}, {}};
  for (int i = 0; i <= 6; ++i) {
    b.coords.push_back("b" + std::to_string(i));
    b.weights.push_back({2 + i});
  }
  s.blocks = {a, b};
  return s;
}

DefSpace DefSpace::by_name(const std::string& name) {
  if (name == "X1T") return X1T();
  if (name == "X1e") return X1e();
  throw MathError("unknown deformation space '" + name + "'");
}

namespace {

TorusPoint as_point(const DefSpace& space, const std::vector<FieldElement>& v) {
  if (v.size() != space.dimension())
    throw MathError("dimension mismatch: " + space.name + " has " + std::to_string(space.dimension()) +
                    " coordinates, got " + std::to_string(v.size()));
  return {v, space.all_weights()};
}

bool all_zero(const std::vector<FieldElement>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// Zero pattern per block: true when the block has a nonzero coordinate.
std::vector<bool> block_pattern(const DefSpace& space, const std::vector<FieldElement>& v) {
  std::vector<bool> out;
  size_t k = 0;
  for (const auto& b : space.blocks) {
    bool nz = false;
    for (size_t i = 0; i < b.coords.size(); ++i, ++k) nz = nz || !v[k].is_zero();
    out.push_back(nz);
  }
  return out;
}

}  // namespace

DefVerdict def_polystability(const DefSpace& space, const std::vector<FieldElement>& v) {
  TorusPoint p = as_point(space, v);
  DefVerdict out;
  if (all_zero(v)) {
    out.result.cls = Stability::PolystableNotStable;
    out.result.notes.push_back("torus-fixed point");
    return out;
  }
  out.result = torus_stability(p);
  if (out.result.cls == Stability::Unstable)
    out.result.notes.push_back("orbit closure contains the fixed point 0");
  auto pat = block_pattern(space, v);
  bool all_on = true, all_off = true;
  for (bool b : pat) {
    all_on = all_on && b;
    all_off = all_off && !b;
  }
  // Reference table for X1T: all-nonzero, all-zero and the two destabilized patterns with a recorded verdict.
  if (space.name == "X1T" && !all_on && !all_off) {
    const bool quoted = (!pat[0] && pat[1] && pat[2]) || (pat[0] && pat[1] && !pat[2]);
    if (!quoted) {
      out.tabulated = false;
      out.result.notes.push_back("derived from the weights; not a tabulated case");
    }
  }
  return out;
}

std::optional<IntVec> destabilizing_1ps(const DefSpace& space, const std::vector<FieldElement>& v) {
  TorusPoint p = as_point(space, v);
  if (all_zero(v)) return std::nullopt;
  auto r = torus_stability(p);
  if (r.cls != Stability::Unstable) return std::nullopt;
  return r.certificate;
}

}  // namespace dpgit
