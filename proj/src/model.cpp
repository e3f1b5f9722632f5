#include "dpgit/model.hpp"

#include <algorithm>
#include <numeric>

#include "dpgit/deform.hpp"
#include "dpgit/errors.hpp"
#include "dpgit/gitstab.hpp"

namespace dpgit {

namespace {

bool all_ones(const std::vector<long>& w) {
  return std::all_of(w.begin(), w.end(), [](long x) { return x == 1; });
}

long homogeneous_degree(const MultiPoly& p, const std::vector<long>& weights) {
  if (p.is_zero()) throw MathError("zero polynomial has no degree");
  auto wd = weighted_degree(p, WeightSystem{weights});
  if (!wd.homogeneous) throw MathError("polynomial is not weighted homogeneous for the declared weights");
  return wd.degrees.front();
}

const MultiPoly& single_poly(const InputDocument& doc) {
  if (doc.polys.size() != 1) throw MathError("expected exactly one polynomial, found " + std::to_string(doc.polys.size()));
  return doc.polys.front().poly;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn = sqrt(n), rd = sqrt(d);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Exponent exp2(int a, int b) {
  Exponent e{};
  e[0] = a;
  e[1] = b;
  return e;
}

}  // namespace

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Cubic: return "cubic surface";
    case ModelKind::Pencil: return "intersection of two quadrics";
    case ModelKind::DoubleCover: return "double cover";
    case ModelKind::PlaneCurve: return "plane curve";
    case ModelKind::BinaryForm: return "binary form";
    case ModelKind::SexticPair: return "degree one pair (f4, f6)";
    case ModelKind::ExceptionalPair: return "exceptional pair (g4, g6)";
  }
  return "?";
}

std::pair<BaseSpace, MultiPoly> double_cover_branch(const MultiPoly& p0, const std::vector<long>& weights) {
  const long d = homogeneous_degree(p0, weights);
  if (d % 2) throw MathError("odd degree: not a double cover");
  std::vector<int> top;
  for (int i = 0; i < p0.nvars(); ++i)
    if (2 * weights[i] == d) top.push_back(i);
  if (top.empty()) throw MathError("no variable of half the degree: not a double cover");
  MultiPoly p = p0;
  auto square_coeff = [&](int v) {
    Exponent e{};
    e[v] = 2;
    return p.coeff(e);
  };
  int w = -1;
  for (int v : top)
    if (!square_coeff(v).is_zero()) w = v;
  if (w < 0) {
    // u1 u2 cross term only: u1 -> u1 + u2 produces a square.
    for (size_t a = 0; a < top.size() && w < 0; ++a)
      for (size_t b = a + 1; b < top.size() && w < 0; ++b) {
        Exponent e{};
        e[top[a]] = 1;
        e[top[b]] = 1;
        if (p.coeff(e).is_zero()) continue;
        std::vector<MultiPoly> images;
        for (int i = 0; i < p.nvars(); ++i) images.push_back(MultiPoly::var(p.vars_ptr(), i));
        images[top[a]] = images[top[a]] + images[top[b]];
        p = substitute(p, images);
        w = top[b];
      }
  }
  if (w < 0) throw MathError("no square of a half-degree variable: not a double cover");
  auto coeffs = p.coefficients_in(w);
  if (coeffs.size() != 3) throw MathError("not quadratic in the covering variable");
  const FieldElement a = coeffs[2].constant_term();
  MultiPoly l = coeffs[1], c = coeffs[0];
  // a w^2 + l w + c = 0  <=>  (w + l/2a)^2 = (l^2 - 4ac) / 4a^2
  MultiPoly branch = (l * l - c.scaled(FieldElement(4) * a)).scaled((FieldElement(4) * a * a).inverse());

  std::vector<int> rest;
  for (int i = 0; i < p.nvars(); ++i)
    if (i != w) rest.push_back(i);
  std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) { return weights[x] < weights[y]; });
  std::vector<long> bw;
  VarList names;
  for (int i : rest) {
    bw.push_back(weights[i]);
    names.push_back(p.vars()[i]);
  }
  std::optional<BaseSpace> base;
  for (BaseSpace b : {BaseSpace::P2, BaseSpace::P112, BaseSpace::P114, BaseSpace::P129})
    if (base_weights(b) == bw) base = b;
  if (!base) throw MathError("base weights are not one of (1,1,1), (1,1,2), (1,1,4), (1,2,9)");
  if (branch.is_zero()) throw MathError("branch curve is zero");
  return {*base, change_ring(branch, make_vars(names))};
}

DegreeOneNormalForm degree_one_normal_form(const MultiPoly& branch) {
  // branch in (x, y, z) with weights (1, 1, 2)
  auto zc = branch.coefficients_in(2);
  zc.resize(4, MultiPoly(branch.vars_ptr()));
  auto xy = make_vars({branch.vars()[0], branch.vars()[1]});
  auto binary = [&](const MultiPoly& q) { return q.is_zero() ? MultiPoly(xy) : change_ring(q, xy); };
  DegreeOneNormalForm out;
  if (!zc[3].is_zero()) {
    // z^3 + b2 z^2 + b4 z + b6 after dividing by the z^3 coefficient; z -> z - b2/3.
    const FieldElement k = zc[3].constant_term().inverse();
    MultiPoly F = branch.scaled(k);
    MultiPoly z = MultiPoly::var(branch.vars_ptr(), 2);
    MultiPoly b2 = zc[2].scaled(k);
    std::vector<MultiPoly> images{MultiPoly::var(branch.vars_ptr(), 0), MultiPoly::var(branch.vars_ptr(), 1),
                                  z - b2.scaled(FieldElement(Rational(1, 3)))};
    MultiPoly G = substitute(F, images);
    auto gc = G.coefficients_in(2);
    gc.resize(4, MultiPoly(branch.vars_ptr()));
    out.sextic = true;
    out.a = binary(gc[1]);
    out.b = binary(gc[0]);
    return out;
  }
  out.sextic = false;
  MultiPoly q2 = binary(zc[2]);
  if (q2.is_zero()) throw MathError("branch has no z^3 or z^2 term: the vertex is not a quotient singularity");
  const Rational al = q2.coeff(exp2(2, 0)).rational(), be = q2.coeff(exp2(1, 1)).rational(),
                 ga = q2.coeff(exp2(0, 2)).rational();
  if (be * be - 4 * al * ga == 0)
    throw MathError("z^2 coefficient has rank one: only the local verdict applies (task def-X1e with a point)");
  MultiPoly X = MultiPoly::var(xy, 0), Y = MultiPoly::var(xy, 1);
  const FieldElement i = FieldElement::generator(gaussian_field());
  std::vector<MultiPoly> images;
  FieldElement kappa;
  if (sgn(al) == 0 && sgn(ga) == 0) {
    // be x y with x = X + iY, y = X - iY
    images = {X + Y.scaled(i), X - Y.scaled(i)};
    kappa = FieldElement(be);
  } else {
    const bool swap = sgn(al) == 0;
    const Rational a = swap ? ga : al, c = swap ? al : ga;
    const Rational delta = c - be * be / (4 * a);
    // q2 = a (U + be/(2a) V)^2 + delta V^2 with (U, V) = (x, y) or (y, x)
    auto r = rational_sqrt(abs(delta / a));
    if (!r) throw MathError("cannot bring the z^2 coefficient to x^2 + y^2 over Q(i)");
    FieldElement s = sgn(delta / a) > 0 ? FieldElement(1 / *r) : -i * FieldElement(1 / *r);
    MultiPoly V = Y.scaled(s);
    MultiPoly U = X - V.scaled(FieldElement(be / (2 * a)));
    images = swap ? std::vector<MultiPoly>{V, U} : std::vector<MultiPoly>{U, V};
    kappa = FieldElement(a);
  }
  const FieldElement inv = kappa.inverse();
  MultiPoly check = substitute(q2, images).scaled(inv);
  if (check != X * X + Y * Y) throw std::logic_error("normalization of the z^2 coefficient failed");
  out.a = zc[1].is_zero() ? MultiPoly(xy) : substitute(binary(zc[1]), images).scaled(inv);
  out.b = zc[0].is_zero() ? MultiPoly(xy) : substitute(binary(zc[0]), images).scaled(inv);
  return out;
}

SurfaceModel recognize(const InputDocument& doc) {
  if (!doc.ambient.vars) throw MathError("document declares no ring");
  const auto& w = doc.ambient.weights;
  const size_t n = w.size();
  SurfaceModel m;
  if (n == 2 && all_ones(w)) {
    const std::string task = doc.task.value_or("");
    if (task == "sextic-dp1" || (doc.find_poly("f4") && doc.find_poly("f6"))) {
      if (!doc.find_poly("f4") || !doc.find_poly("f6")) throw MathError("sextic-dp1 needs polys f4 and f6");
      m.kind = ModelKind::SexticPair;
      m.f4 = *doc.find_poly("f4");
      m.f6 = *doc.find_poly("f6");
      m.degree = 1;
      return m;
    }
    if (task == "exceptional-E" || (doc.find_poly("g4") && doc.find_poly("g6"))) {
      if (!doc.find_poly("g4") || !doc.find_poly("g6")) throw MathError("exceptional-E needs polys g4 and g6");
      m.kind = ModelKind::ExceptionalPair;
      m.f4 = *doc.find_poly("g4");
      m.f6 = *doc.find_poly("g6");
      m.degree = 1;
      return m;
    }
    m.kind = ModelKind::BinaryForm;
    m.form = single_poly(doc);
    m.degree = static_cast<int>(homogeneous_degree(m.form, w));
    return m;
  }
  if (n == 3 && all_ones(w)) {
    m.kind = ModelKind::PlaneCurve;
    m.form = single_poly(doc);
    m.degree = static_cast<int>(homogeneous_degree(m.form, w));
    return m;
  }
  if (n == 4 && all_ones(w)) {
    m.kind = ModelKind::Cubic;
    m.form = single_poly(doc);
    if (homogeneous_degree(m.form, w) != 3) throw MathError("only cubic surfaces are supported in P3");
    m.degree = 3;
    return m;
  }
  if (n == 5 && all_ones(w)) {
    m.kind = ModelKind::Pencil;
    m.degree = 4;
    if (doc.matrices.size() == 2 && doc.polys.empty()) {
      m.pencil.A = doc.matrices[0].entries;
      m.pencil.B = doc.matrices[1].entries;
      for (const QMat* q : {&m.pencil.A, &m.pencil.B}) {
        if (q->size() != 5) throw MathError("pencil matrices must be 5x5");
        for (size_t r = 0; r < 5; ++r) {
          if ((*q)[r].size() != 5) throw MathError("pencil matrices must be 5x5");
          for (size_t c = 0; c < r; ++c)
            if ((*q)[r][c] != (*q)[c][r]) throw MathError("pencil matrices must be symmetric");
        }
      }
      return m;
    }
    if (doc.polys.size() != 2) throw MathError("a pencil needs two quadrics or two matrices");
    m.pencil = pencil_from_quadrics(doc.polys[0].poly, doc.polys[1].poly);
    return m;
  }
  if (n == 4) {
    m.kind = ModelKind::DoubleCover;
    auto [base, branch] = double_cover_branch(single_poly(doc), w);
    m.base = base;
    m.form = std::move(branch);
    m.degree = base == BaseSpace::P2 || base == BaseSpace::P114 ? 2 : 1;
    return m;
  }
  throw MathError("unsupported ambient " + doc.ambient.to_string());
}

SurfaceProfile model_profile(const SurfaceModel& m, const TruncationPolicy& policy) {
  switch (m.kind) {
    case ModelKind::Cubic: return profile_cubic(m.form, policy);
    case ModelKind::Pencil: return profile_pencil(m.pencil, policy);
    case ModelKind::DoubleCover: return profile_double_cover(m.base, m.form, policy);
    case ModelKind::PlaneCurve: return profile_plane_curve(m.form, policy);
    case ModelKind::SexticPair: {
      auto vars = make_vars({m.f4.vars()[0], m.f4.vars()[1], "z"});
      MultiPoly z = MultiPoly::var(vars, 2);
      auto lift = [&](const MultiPoly& q) { return q.is_zero() ? MultiPoly(vars) : change_ring(q, vars); };
      return profile_double_cover(BaseSpace::P112, z.pow(3) + lift(m.f4) * z + lift(m.f6), policy);
    }
    case ModelKind::ExceptionalPair: {
      auto vars = make_vars({m.f4.vars()[0], m.f4.vars()[1], "z"});
      MultiPoly x = MultiPoly::var(vars, 0), y = MultiPoly::var(vars, 1), z = MultiPoly::var(vars, 2);
      auto lift = [&](const MultiPoly& q) { return q.is_zero() ? MultiPoly(vars) : change_ring(q, vars); };
      return profile_double_cover(BaseSpace::P112, z * z * (x * x + y * y) + lift(m.f4) * z + lift(m.f6), policy);
    }
    case ModelKind::BinaryForm: break;
  }
  throw MathError("binary forms have no surface profile");
}

StabilityReport model_stability(const SurfaceModel& m, const SurfaceProfile* profile, const TruncationPolicy& policy) {
  switch (m.kind) {
    case ModelKind::Cubic: {
      SurfaceProfile p = profile ? *profile : profile_cubic(m.form, policy);
      return {cubic_stability(m.form, p), "cubic"};
    }
    case ModelKind::Pencil: {
      SurfaceProfile p = profile ? *profile : profile_pencil(m.pencil, policy);
      return {quartic_dp_stability(m.pencil, p), "quartic-dp"};
    }
    case ModelKind::PlaneCurve:
      if (m.degree != 4) throw MathError("stability is implemented for plane quartics only");
      return {plane_quartic_stability(m.form), "plane-quartic"};
    case ModelKind::BinaryForm: return {binary_form_stability(m.form, m.degree), "binary-form"};
    case ModelKind::SexticPair: return {sextic_dp1_stability(m.f4, m.f6), "sextic-dp1"};
    case ModelKind::ExceptionalPair: return {exceptional_E_stability(m.f4, m.f6), "exceptional-E"};
    case ModelKind::DoubleCover: break;
  }
  switch (m.base) {
    case BaseSpace::P2: return {plane_quartic_stability(m.form), "plane-quartic"};
    case BaseSpace::P112: {
      auto nf = degree_one_normal_form(m.form);
      if (nf.sextic) return {sextic_dp1_stability(nf.a, nf.b), "sextic-dp1"};
      return {exceptional_E_stability(nf.a, nf.b), "exceptional-E"};
    }
    case BaseSpace::P114: {
      auto zc = m.form.coefficients_in(2);
      zc.resize(3, MultiPoly(m.form.vars_ptr()));
      if (zc[2].is_zero()) throw MathError("branch has no z^2 term: the vertex is not a quotient singularity");
      auto xy = make_vars({m.form.vars()[0], m.form.vars()[1]});
      MultiPoly octic = zc[1] * zc[1] - (zc[0] * zc[2]).scaled(FieldElement(4));
      if (octic.is_zero()) throw MathError("branch is a perfect square");
      return {binary_form_stability(change_ring(octic, xy), 8), "binary-octic"};
    }
    case BaseSpace::P129:
      throw MathError("no global GIT model on P(1,2,9); the local verdict comes from task def-X1T with a point");
  }
  throw std::logic_error("unreachable");
}

}  // namespace dpgit
