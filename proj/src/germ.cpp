#include "dpgit/germ.hpp"

#include <cstdlib>
#include <string>

#include "dpgit/errors.hpp"

namespace dpgit {

namespace {

Exponent ex2(int i, int j) {
  Exponent e{};
  e[0] = i;
  e[1] = j;
  return e;
}

// Order of a univariate series in variable v (other variables absent); -1 if zero.
int series_order(const MultiPoly& c) { return c.is_zero() ? -1 : c.order(); }

// Coordinates (X, Y) with Y = alpha x + beta y; returns f in (X, Y).
MultiPoly put_line_at_y(const MultiPoly& f, const FieldElement& alpha, const FieldElement& beta) {
  if (!beta.is_zero()) return linear_change(f, {{1, 0}, {-alpha / beta, beta.inverse()}});
  return linear_change(f, {{0, alpha.inverse()}, {1, 0}});
}

SingularityType classify_mult2(const MultiPoly& f, int n) {
  FieldElement a = f.coeff(ex2(2, 0)), b = f.coeff(ex2(1, 1)), c = f.coeff(ex2(0, 2));
  if (!(b * b - FieldElement(4) * a * c).is_zero()) return SingularityType::A(1);
  MultiPoly g = a.is_zero() ? f : put_line_at_y(f, 1, b / (FieldElement(2) * a));
  FieldElement q = g.coeff(ex2(0, 2));
  auto phi = solve_critical(g, {1}, {{(FieldElement(2) * q).inverse()}}, n);
  MultiPoly res = substitute(g, {MultiPoly::var(g.vars_ptr(), 0), phi[0]}, n);
  int k = series_order(res);
  if (k < 0) throw TruncationError();
  return SingularityType::A(k - 1);
}

SingularityType classify_mult3(const MultiPoly& f, int n) {
  const auto& vars = f.vars_ptr();
  MultiPoly cone = f.homogeneous_part(3);
  MultiPoly g = gcd_multi(gcd_multi(cone, cone.derivative(0)), cone.derivative(1));
  const int dg = g.total_degree();
  if (dg == 0) return SingularityType::D(4);
  if (dg == 1) {
    // cone = u^2 v; coordinates U = u, V = v, then blow up U = V t.
    MultiPoly u = g;
    MultiPoly v = *exact_divide(cone, u * u);
    Exponent ex{}, ey{};
    ex[0] = 1;
    ey[1] = 1;
    Mat m{{u.coeff(ex), u.coeff(ey)}, {v.coeff(ex), v.coeff(ey)}};
    MultiPoly h = linear_change(f, inverse(m));  // h(U,V), cubic part c U^2 V
    // f~(t,V) = h(V t, V) / V^3, known modulo V^(n-2).
    MultiPoly t = MultiPoly::var(vars, 0), V = MultiPoly::var(vars, 1);
    MultiPoly blown = substitute(h, {t * V, V});
    MultiPoly ft(vars);
    for (const auto& [e, c] : blown.terms()) {
      Exponent d = e;
      d[1] -= 3;
      if (d[1] < 0) throw std::logic_error("blow-up lost the cubic cone");
      ft.add_term(d, c);
    }
    const int prec = n - 3;  // V-degree known
    if (prec < 1) throw TruncationError();
    FieldElement q = ft.coeff(ex2(2, 0));
    // The solution t = psi(V) only involves V, so total-degree truncation is V-truncation.
    auto psi = solve_critical(ft, {0}, {{(FieldElement(2) * q).inverse()}}, prec);
    MultiPoly res = substitute(ft, {psi[0], V}, prec);
    int k = series_order(res);
    if (k < 0) throw TruncationError();
    return SingularityType::D(4 + k);
  }
  MultiPoly line = gcd_multi(gcd_multi(g, g.derivative(0)), g.derivative(1));
  Exponent ex{}, ey{};
  ex[0] = 1;
  ey[1] = 1;
  MultiPoly h = put_line_at_y(f, line.coeff(ex), line.coeff(ey));
  if (n < 5) throw TruncationError();
  if (!h.coeff(ex2(4, 0)).is_zero()) return SingularityType::E(6);
  if (!h.coeff(ex2(3, 1)).is_zero()) return SingularityType::E(7);
  if (!h.coeff(ex2(5, 0)).is_zero()) return SingularityType::E(8);
  return SingularityType::worse();
}

int env_truncation() {
  if (const char* s = std::getenv("DPGIT_TRUNCATION")) {
    try {
      int v = std::stoi(s);
      if (v >= 4) return v;
    } catch (const std::exception&) {
    }
  }
  return 24;
}

template <class F>
SingularityType with_policy(const TruncationPolicy& policy, F attempt) {
  for (int n = policy.start;; n *= 2) {
    try {
      return attempt(n);
    } catch (const TruncationError&) {
      if (n * 2 > policy.max) throw;
    }
  }
}

}  // namespace

TruncationPolicy TruncationPolicy::from_env() { return {env_truncation(), 192}; }

MultiPoly linear_change(const MultiPoly& p, const Mat& m) {
  const auto& vars = p.vars_ptr();
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) {
    MultiPoly img(vars);
    for (int j = 0; j < p.nvars(); ++j)
      if (!m[i][j].is_zero()) img += MultiPoly::var(vars, j).scaled(m[i][j]);
    images.push_back(std::move(img));
  }
  MultiPoly out = substitute(p, images);
  out.set_weights(p.weights());
  return out;
}

std::vector<MultiPoly> solve_critical(const MultiPoly& g, const std::vector<int>& solve, const Mat& jinv, int n) {
  const auto& vars = g.vars_ptr();
  const size_t s = solve.size();
  std::vector<MultiPoly> grads;
  for (int i : solve) grads.push_back(g.derivative(i));
  std::vector<MultiPoly> images;
  for (int i = 0; i < g.nvars(); ++i) images.push_back(MultiPoly::var(vars, i));
  for (int i : solve) images[i] = MultiPoly(vars);
  // Each pass fixes one more degree; the precision ramps up with it.
  for (int step = 1;; ++step) {
    const int prec = std::min(n, step + 1);
    std::vector<MultiPoly> r;
    for (const auto& gr : grads) r.push_back(substitute(gr, images, prec));
    bool zero = true;
    for (size_t a = 0; a < s; ++a) {
      MultiPoly delta(vars);
      for (size_t b = 0; b < s; ++b)
        if (!jinv[a][b].is_zero()) delta += r[b].scaled(jinv[a][b]);
      if (!delta.is_zero()) zero = false;
      images[solve[a]] = (images[solve[a]] - delta).truncated(n);
    }
    if (zero && prec == n) break;
    if (step > 4 * n + 8) throw std::logic_error("critical-point iteration failed to converge");
  }
  std::vector<MultiPoly> out;
  for (int i : solve) out.push_back(images[i]);
  return out;
}

MultiPoly solve_smooth(const MultiPoly& g, int k, int n) {
  const auto& vars = g.vars_ptr();
  Exponent ek{};
  ek[k] = 1;
  const FieldElement a = g.coeff(ek);
  if (a.is_zero()) throw MathError("hypersurface is singular in the solved direction");
  const FieldElement ainv = a.inverse();
  std::vector<MultiPoly> images;
  for (int i = 0; i < g.nvars(); ++i) images.push_back(MultiPoly::var(vars, i));
  images[k] = MultiPoly(vars);
  for (int step = 1;; ++step) {
    const int prec = std::min(n, step);
    MultiPoly r = substitute(g, images, prec);
    images[k] = (images[k] - r.scaled(ainv)).truncated(n);
    if (r.is_zero() && prec == n) break;
    if (step > 4 * n + 8) throw std::logic_error("implicit-function iteration failed to converge");
  }
  return images[k];
}

std::optional<long> intersection_multiplicity(const MultiPoly& f0, const MultiPoly& g0) {
  // Fulton's algorithm, iterative: total accumulates I(y, .) contributions.
  if (f0.nvars() != 2) throw MathError("intersection multiplicity needs two variables");
  const auto& vars = f0.vars_ptr();
  const MultiPoly y = MultiPoly::var(vars, 1);
  long total = 0;
  MultiPoly f = f0, g = g0;
  auto on_axis = [](const MultiPoly& p) { return specialize(p, 1, 0); };
  while (true) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return total;
    MultiPoly fa = on_axis(f), ga = on_axis(g);
    if (fa.is_zero() && ga.is_zero()) {
      return std::nullopt;  // y divides both
    }
    if (fa.is_zero() || ga.is_zero()) {
      if (fa.is_zero()) std::swap(f, g), std::swap(fa, ga);
      // g = y * g1: I(f, g) = I(f, y) + I(f, g1)
      total += fa.order();
      g = *exact_divide(g, y);
      continue;
    }
    int r = fa.degree_in(0), s = ga.degree_in(0);
    if (r > s) {
      std::swap(f, g);
      std::swap(fa, ga);
      std::swap(r, s);
    }
    FieldElement lf = fa.coeff(ex2(r, 0)), lg = ga.coeff(ex2(s, 0));
    Exponent sh = ex2(s - r, 0);
    g = g - (MultiPoly::monomial(vars, sh, lg / lf) * f);
  }
}

std::optional<long> milnor_number(const MultiPoly& f) {
  return intersection_multiplicity(f.derivative(0), f.derivative(1));
}

SingularityType classify_curve_germ(const CurveGerm& germ) {
  const MultiPoly& f0 = germ.f;
  if (f0.nvars() != 2) throw MathError("curve germ needs two variables");
  if (f0.is_zero()) throw MathError("curve germ is identically zero");
  if (!f0.constant_term().is_zero()) throw MathError("curve germ does not pass through the origin");
  const int n = germ.truncation;
  MultiPoly f = f0.truncated(n);
  try {
    switch (f.is_zero() ? n + 1 : f.order()) {
      case 1: return SingularityType::smooth();
      case 2: return classify_mult2(f, n);
      case 3: return classify_mult3(f, n);
      default:
        if (f.is_zero()) throw TruncationError();
        if (germ.exact) {
          MultiPoly rep = repeated_part(f0);
          if (!rep.is_constant() && rep.constant_term().is_zero()) return SingularityType::non_normal();
        }
        return SingularityType::worse();
    }
  } catch (const TruncationError&) {
    // Undecided at this order: an exact polynomial with a multiple component
    // through the origin is non-isolated, anything else needs more precision.
    if (germ.exact) {
      MultiPoly rep = repeated_part(f0);
      if (!rep.is_constant() && rep.constant_term().is_zero()) return SingularityType::non_normal();
    }
    throw;
  }
}

SingularityType classify_curve_germ(const MultiPoly& f, const TruncationPolicy& policy) {
  return with_policy(policy, [&](int n) { return classify_curve_germ(CurveGerm{f, n, true}); });
}

SingularityType double_cover_type(const CurveGerm& g) {
  if (!g.f.constant_term().is_zero()) return SingularityType::smooth();
  return classify_curve_germ(g);
}

SingularityType double_cover_type(const MultiPoly& f, const TruncationPolicy& policy) {
  if (!f.constant_term().is_zero()) return SingularityType::smooth();
  return classify_curve_germ(f, policy);
}

bool quotient_singularity_test(const MultiPoly& f) {
  for (const auto& [e, c] : f.terms())
    if (exponent_degree(e) <= 3) return true;
  return false;
}

SingularityType classify_surface_germ(const MultiPoly& f0, int n, bool exact) {
  if (f0.nvars() != 3) throw MathError("surface germ needs three variables");
  if (!f0.constant_term().is_zero()) throw MathError("surface germ does not pass through the origin");
  MultiPoly f = f0.truncated(n);
  if (f.is_zero()) {
    if (exact) return SingularityType::non_normal();
    throw TruncationError();
  }
  if (f.order() == 1) return SingularityType::smooth();
  if (f.order() >= 3) return SingularityType::worse();
  const auto& vars = f.vars_ptr();
  Mat h(3, Vec(3, FieldElement(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent e{};
      e[i] += 1;
      e[j] += 1;
      h[i][j] = f.coeff(e) * FieldElement(i == j ? 2 : 1);
    }
  const int rk = rank(h);
  if (rk == 3) return SingularityType::A(1);
  // Basis: complement of the kernel first, kernel last.
  auto ker = kernel(h);
  Mat basis;
  for (int i = 0; i < 3 && static_cast<int>(basis.size()) < rk; ++i) {
    Vec e(3, FieldElement(0));
    e[i] = 1;
    Mat trial = basis;
    trial.push_back(e);
    for (const auto& k : ker) trial.push_back(k);
    if (rank(trial) == static_cast<int>(trial.size())) basis.push_back(e);
  }
  for (const auto& k : ker) basis.push_back(k);
  MultiPoly g = linear_change(f, transpose(basis));
  Mat block(rk, Vec(rk));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) {
      Exponent e{};
      e[i] += 1;
      e[j] += 1;
      block[i][j] = g.coeff(e) * FieldElement(i == j ? 2 : 1);
    }
  std::vector<int> solve;
  for (int i = 0; i < rk; ++i) solve.push_back(i);
  auto phi = solve_critical(g, solve, inverse(block), n);
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) images.push_back(i < rk ? phi[i] : MultiPoly::var(vars, i));
  MultiPoly res = substitute(g, images, n);
  if (rk == 2) {
    int k = series_order(res);
    if (k < 0) throw TruncationError();
    return SingularityType::A(k - 1);
  }
  // rk == 1: residual curve in the two kernel directions.
  auto cvars = make_vars({vars->at(1), vars->at(2)});
  MultiPoly curve(cvars);
  for (const auto& [e, c] : res.terms()) curve.add_term(ex2(e[1], e[2]), c);
  if (curve.is_zero()) throw TruncationError();
  return classify_curve_germ(CurveGerm{curve, n, false});
}

SingularityType classify_surface_germ(const MultiPoly& f, const TruncationPolicy& policy) {
  return with_policy(policy, [&](int n) { return classify_surface_germ(f, n, true); });
}

}  // namespace dpgit
