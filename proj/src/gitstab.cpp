#include "dpgit/gitstab.hpp"

#include <algorithm>
#include <map>

#include "dpgit/errors.hpp"
#include "dpgit/linalg.hpp"

namespace dpgit {

namespace {

bool only(const std::vector<SingularityType>& ts, std::initializer_list<SingularityType> allowed) {
  return std::all_of(ts.begin(), ts.end(), [&](const SingularityType& t) {
    return std::find(allowed.begin(), allowed.end(), t) != allowed.end();
  });
}

long count(const std::vector<SingularityType>& ts, const SingularityType& t) {
  return std::count(ts.begin(), ts.end(), t);
}

StabilityResult unstable_with_certificate(const std::vector<MultiPoly>& forms, std::string note) {
  StabilityResult r;
  r.cls = Stability::Unstable;
  r.certificate = monomial_certificate(forms);
  if (!r.certificate) r.notes.push_back("no diagonal 1-PS destabilizes in the given coordinates");
  if (!note.empty()) r.notes.push_back(std::move(note));
  return r;
}

StabilityResult verdict(Stability s, std::string note = "") {
  StabilityResult r;
  r.cls = s;
  if (!note.empty()) r.notes.push_back(std::move(note));
  return r;
}

}  // namespace

FieldPtr gaussian_field() {
  static const FieldPtr k = make_field({Rational(1), Rational(0), Rational(1)}, "i");
  return k;
}

std::optional<IntVec> monomial_certificate(const std::vector<MultiPoly>& forms) {
  Support s;
  int n = -1;
  for (const auto& f : forms) {
    n = f.nvars() - 1;
    for (const auto& [e, c] : f.terms()) {
      (void)c;
      IntVec w(n);
      for (int i = 0; i < n; ++i) w[i] = e[i] - e[n];
      if (std::find(s.begin(), s.end(), w) == s.end()) s.push_back(w);
    }
  }
  if (s.empty()) throw MathError("empty support: the zero vector has no stability class");
  auto r = torus_stability_support(s);
  if (r.cls != Stability::Unstable) return std::nullopt;
  IntVec full = *r.certificate;
  long sum = 0;
  for (long x : full) sum += x;
  full.push_back(-sum);
  return full;
}

StabilityResult monomial_torus_stability(const std::vector<MultiPoly>& forms) {
  Support s;
  for (const auto& f : forms) {
    const int n = f.nvars() - 1;
    for (const auto& [e, c] : f.terms()) {
      (void)c;
      IntVec w(n);
      for (int i = 0; i < n; ++i) w[i] = e[i] - e[n];
      if (std::find(s.begin(), s.end(), w) == s.end()) s.push_back(w);
    }
  }
  auto r = torus_stability_support(s);
  if (r.certificate) {
    long sum = 0;
    for (long x : *r.certificate) sum += x;
    r.certificate->push_back(-sum);
  }
  return r;
}

std::vector<int> binary_root_multiplicities(const MultiPoly& f, int d) {
  if (f.is_zero()) throw MathError("binary form is zero");
  if (f.nvars() != 2) throw MathError("binary form needs two variables");
  KPoly u = to_kpoly(change_ring(specialize(f, 1, 1), make_vars({f.vars()[0]})), 0);
  std::vector<int> mult;
  auto parts = squarefree_decomposition(u);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int k = 0; k < deg(parts[i]); ++k) mult.push_back(static_cast<int>(i) + 1);
  if (d - deg(u) > 0) mult.push_back(d - deg(u));
  std::sort(mult.rbegin(), mult.rend());
  return mult;
}

StabilityResult binary_form_stability(const MultiPoly& f, int d) {
  auto wd = weighted_degree(f, WeightSystem{{1, 1}});
  if (!wd.homogeneous || wd.degrees.front() != d) throw MathError("binary form must be homogeneous of the stated degree");
  auto mult = binary_root_multiplicities(f, d);
  const int top = mult.front();
  if (2 * top > d) return unstable_with_certificate({f}, "root of multiplicity " + std::to_string(top));
  if (2 * top < d) return verdict(Stability::Stable);
  if (mult.size() == 2 && mult[1] * 2 == d) return verdict(Stability::PolystableNotStable);
  return verdict(Stability::SemistableNotPolystable);
}

StabilityResult cubic_stability(const MultiPoly& F, const SurfaceProfile& profile) {
  if (!profile.is_normal) return unstable_with_certificate({F}, "non-normal");
  const auto ts = profile.types();
  const auto A1 = SingularityType::A(1), A2 = SingularityType::A(2);
  if (only(ts, {A1})) return verdict(Stability::Stable);
  if (only(ts, {A1, A2})) {
    if (ts.size() == 3 && count(ts, A2) == 3) return verdict(Stability::PolystableNotStable);
    return verdict(Stability::SemistableNotPolystable);
  }
  return unstable_with_certificate({F}, "singularity worse than A2");
}

StabilityResult cubic_stability(const MultiPoly& F) { return cubic_stability(F, profile_cubic(F)); }

StabilityResult quartic_dp_stability(const QuadricPencil& P, const SurfaceProfile& profile) {
  MultiPoly q = pencil_determinant(P);
  if (q.is_zero()) throw MathError("degenerate pencil");
  auto mult = binary_root_multiplicities(q, 5);
  if (mult.front() >= 3) {
    StabilityResult r = unstable_with_certificate({q}, "eigenvalue of multiplicity " + std::to_string(mult.front()));
    r.certificate.reset();  // a certificate on the quintic is not one on the pencil
    r.boundary = mult.front() == 3;
    return r;
  }
  if (!profile.is_normal) return verdict(Stability::Unstable, "non-normal");
  const auto ts = profile.types();
  if (ts.empty()) return verdict(Stability::Stable);
  if (!only(ts, {SingularityType::A(1)})) return verdict(Stability::Unstable, "singularity worse than A1");
  if (simultaneously_diagonalizable(P)) return verdict(Stability::PolystableNotStable);
  return verdict(Stability::SemistableNotPolystable);
}

StabilityResult quartic_dp_stability(const QuadricPencil& P) {
  if (pencil_determinant(P).is_zero()) throw MathError("degenerate pencil");
  return quartic_dp_stability(P, profile_pencil(P));
}

StabilityResult plane_quartic_stability(const MultiPoly& F) {
  if (F.is_zero()) throw MathError("plane quartic is zero");
  auto wd = weighted_degree(F, WeightSystem{{1, 1, 1}});
  if (!wd.homogeneous || wd.degrees.front() != 4) throw MathError("plane quartic must be a homogeneous quartic");
  MultiPoly rep = repeated_part(F);
  if (!rep.is_constant()) {
    if (rep.total_degree() == 2) {
      auto cofactor = exact_divide(F, rep * rep);
      Mat h(3, Vec(3, FieldElement(0)));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = rep.derivative(i).derivative(j).constant_term();
      if (cofactor && cofactor->is_constant() && rank(h) == 3)
        return verdict(Stability::PolystableNotStable, "double smooth conic");
    }
    return unstable_with_certificate({F}, "non-reduced");
  }
  auto prof = profile_plane_curve(F);
  auto ts = prof.types();
  for (const auto& t : ts)
    if (t.tag != SingTag::A) return unstable_with_certificate({F}, "point worse than a double point");
  // A cubic plus an inflectional tangent line shows up as an A5 whose tangent line divides F.
  for (const auto& p : prof.singular_points) {
    if (p.type != SingularityType::A(5)) continue;
    Vec row(3, FieldElement(0));
    for (int i = 0; i < 3 && std::all_of(row.begin(), row.end(), [](auto& x) { return x.is_zero(); }); ++i)
      for (int j = 0; j < 3; ++j) row[j] = F.derivative(i).derivative(j).evaluate(p.point);
    MultiPoly line(F.vars_ptr());
    for (int j = 0; j < 3; ++j) line += MultiPoly::var(F.vars_ptr(), j).scaled(row[j]);
    if (exact_divide(F, line)) return unstable_with_certificate({F}, "cubic with an inflectional tangent line");
  }
  const auto A1 = SingularityType::A(1), A2 = SingularityType::A(2), A3 = SingularityType::A(3);
  if (only(ts, {A1, A2})) return verdict(Stability::Stable);
  if (ts == std::vector<SingularityType>{A3, A3} || ts == std::vector<SingularityType>{A1, A3, A3})
    return verdict(Stability::PolystableNotStable, "two conics tangent at two points");
  return verdict(Stability::SemistableNotPolystable);
}

StabilityResult sextic_dp1_stability(const MultiPoly& f4, const MultiPoly& f6) {
  if (f4.is_zero() && f6.is_zero()) throw MathError("f4 and f6 are both zero");
  const auto& vars = f4.vars_ptr();
  if (f4.nvars() != 2 || !same_vars(vars, f6.vars_ptr())) throw MathError("f4 and f6 must be binary forms in the same variables");
  auto check = [](const MultiPoly& f, int d, const char* name) {
    if (f.is_zero()) return;
    auto wd = weighted_degree(f, WeightSystem{{1, 1}});
    if (!wd.homogeneous || wd.degrees.front() != d) throw MathError(std::string(name) + " has the wrong degree");
  };
  check(f4, 4, "f4");
  check(f6, 6, "f6");
  // Roots of multiplicity >= k are the common roots of all (k-1)-th partials.
  auto high_locus = [&](const MultiPoly& f, int order) {
    MultiPoly g(vars);
    if (f.is_zero()) return g;
    std::vector<MultiPoly> layer{f};
    for (int k = 0; k < order; ++k) {
      std::vector<MultiPoly> next;
      for (const auto& p : layer)
        for (int v = 0; v < 2; ++v) next.push_back(p.derivative(v));
      layer = std::move(next);
    }
    for (const auto& p : layer)
      if (!p.is_zero()) g = g.is_zero() ? p : gcd_multi(g, p);
    return g;
  };
  MultiPoly g4 = high_locus(f4, 2), g6 = high_locus(f6, 3);
  MultiPoly common = g4.is_zero() ? g6 : g6.is_zero() ? g4 : gcd_multi(g4, g6);
  if (common.is_zero() || !common.is_constant()) {
    StabilityResult r;
    r.cls = Stability::Unstable;
    Support s;
    for (const auto* f : {&f4, &f6})
      for (const auto& [e, c] : f->terms()) {
        (void)c;
        s.push_back({e[0] - e[1]});
      }
    auto t = torus_stability_support(s);
    if (t.cls == Stability::Unstable) {
      r.certificate = IntVec{(*t.certificate)[0], -(*t.certificate)[0]};
    } else {
      r.notes.push_back("no diagonal 1-PS destabilizes in the given coordinates");
    }
    r.notes.push_back("f4 has multiplicity >= 3 and f6 multiplicity >= 4 at a common point");
    return r;
  }
  auto bvars = make_vars({vars->at(0), vars->at(1), "z"});
  MultiPoly z = MultiPoly::var(bvars, 2);
  MultiPoly branch = z.pow(3) + change_ring(f4, bvars) * z + change_ring(f6, bvars);
  auto prof = profile_double_cover(BaseSpace::P112, branch);
  if (!prof.is_normal) return verdict(Stability::PolystableNotStable, "non-normal (p0 orbit)");
  auto ts = prof.types();
  if (std::all_of(ts.begin(), ts.end(), [](const SingularityType& t) { return t.tag == SingTag::A; }))
    return verdict(Stability::Stable);
  if (ts == std::vector<SingularityType>{SingularityType::D(4), SingularityType::D(4)})
    return verdict(Stability::PolystableNotStable, "two D4 points");
  return verdict(Stability::SemistableNotPolystable);
}

const Support& exceptional_weights() {
  static const Support w{{4}, {-4}, {6}, {4}, {2}, {0}, {-2}, {-4}, {-6}};
  return w;
}

std::vector<FieldElement> exceptional_coordinates(const MultiPoly& g4, const MultiPoly& g6) {
  const FieldPtr k = gaussian_field();
  const FieldElement i = FieldElement::generator(k);
  auto uv = make_vars({"u", "v"});
  MultiPoly u = MultiPoly::var(uv, 0), v = MultiPoly::var(uv, 1);
  // x = (u + v)/2, y = (u - v)/(2i)
  std::vector<MultiPoly> images{(u + v).scaled(FieldElement(Rational(1, 2))),
                                (u - v).scaled((FieldElement(2) * i).inverse())};
  auto to_uv = [&](const MultiPoly& g, int d) {
    if (g.is_zero()) return MultiPoly(uv);
    if (g.nvars() != 2) throw MathError("binary form needs two variables");
    auto wd = weighted_degree(g, WeightSystem{{1, 1}});
    if (!wd.homogeneous || wd.degrees.front() != d) throw MathError("binary form has the wrong degree");
    return substitute(g, images);
  };
  MultiPoly a4 = to_uv(g4, 4), a6 = to_uv(g6, 6);
  auto co = [](const MultiPoly& p, int eu, int ev) {
    Exponent e{};
    e[0] = eu;
    e[1] = ev;
    return p.coeff(e);
  };
  for (int k = 1; k <= 3; ++k)
    if (!co(a4, 4 - k, k).is_zero()) throw MathError("g4 must lie in the span of (x+iy)^4 and (x-iy)^4");
  std::vector<FieldElement> out{co(a4, 4, 0), co(a4, 0, 4)};
  for (int k = 0; k <= 6; ++k) out.push_back(co(a6, 6 - k, k));
  return out;
}

StabilityResult exceptional_E_stability(const MultiPoly& g4, const MultiPoly& g6) {
  auto c = exceptional_coordinates(g4, g6);
  if (std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); }))
    throw MathError("(g4, g6) is zero");
  return torus_stability(TorusPoint{c, exceptional_weights()});
}

}  // namespace dpgit
