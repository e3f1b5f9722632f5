#include "dpgit/solve.hpp"

#include <random>

#include "dpgit/errors.hpp"
#include "dpgit/factor.hpp"

namespace dpgit {

namespace {

using Rng = std::mt19937;

MultiPoly random_combination(const std::vector<MultiPoly>& ps, Rng& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  MultiPoly out(ps.front().vars_ptr());
  for (const auto& p : ps) out += p.scaled(FieldElement(d(rng)));
  return out;
}

// Eliminate every variable except target; returns a polynomial in target only
// (zero if elimination collapsed, which signals a positive-dimensional set).
MultiPoly eliminant(std::vector<MultiPoly> eqs, int target, Rng& rng) {
  const VarsPtr vars = eqs.front().vars_ptr();
  for (int v = 0; v < static_cast<int>(vars->size()); ++v) {
    if (v == target) continue;
    std::vector<MultiPoly> with, without;
    for (auto& p : eqs) {
      if (p.is_zero()) continue;
      (p.involves(v) ? with : without).push_back(p);
    }
    if (with.size() >= 2) {
      for (int k = 0; k < 3; ++k) {
        MultiPoly g1 = random_combination(with, rng), g2 = random_combination(with, rng);
        if (g1.degree_in(v) == 0 || g2.degree_in(v) == 0) continue;
        without.push_back(resultant(g1, g2, v));
      }
    }
    eqs = std::move(without);
  }
  MultiPoly g(vars);
  for (const auto& p : eqs) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p : gcd_multi(g, p);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? g : g.monic();
}

struct ShapeFailure {};

// Recursive back-substitution: solves for variables in order, values already fixed
// for the first `fixed.size()` ones (after the change of coordinates).
void extend(const std::vector<MultiPoly>& eqs, std::vector<FieldElement> fixed, int cluster, Rng& rng,
            SolveResult& out) {
  const int n = eqs.front().nvars();
  const int v = static_cast<int>(fixed.size());
  if (v == n) {
    for (const auto& p : eqs)
      if (!p.evaluate(fixed).is_zero()) return;  // spurious root of an eliminant
    out.points.push_back({fixed, cluster});
    return;
  }
  std::vector<MultiPoly> sub;
  for (const auto& p : eqs) {
    MultiPoly q = p;
    for (int i = 0; i < v; ++i) q = specialize(q, i, fixed[i]);
    if (q.is_zero()) continue;
    if (q.is_constant()) return;
    sub.push_back(std::move(q));
  }
  if (sub.empty()) {
    out.positive_dimensional = true;
    return;
  }
  MultiPoly e = eliminant(sub, v, rng);
  if (e.is_zero()) {
    out.positive_dimensional = true;
    return;
  }
  if (e.is_constant()) return;
  KPoly u = squarefree_part(to_kpoly(e, v));
  if (deg(u) != 1) throw ShapeFailure{};
  fixed.push_back(-u[0] / u[1]);
  extend(eqs, std::move(fixed), cluster, rng, out);
}

}  // namespace

std::vector<AlgebraicPoint> roots_q(const QPoly& p) {
  std::vector<AlgebraicPoint> out;
  for (const auto& [m, mult] : factor_q(p)) {
    (void)mult;
    if (deg(m) == 1) {
      out.push_back({{FieldElement(Rational(-m[0]))}, 1});
    } else {
      auto k = make_field_unchecked(m, "t");
      out.push_back({{FieldElement::generator(k)}, deg(m)});
    }
  }
  return out;
}

SolveResult solve_affine(const std::vector<MultiPoly>& eqs_in) {
  std::vector<MultiPoly> eqs;
  for (const auto& p : eqs_in)
    if (!p.is_zero()) eqs.push_back(p);
  SolveResult empty_result;
  if (eqs.empty()) {
    empty_result.positive_dimensional = true;
    return empty_result;
  }
  for (const auto& p : eqs)
    if (p.is_constant()) return empty_result;
  const auto& vars = eqs.front().vars_ptr();
  const int n = static_cast<int>(vars->size());
  Rng rng(20240601);
  int collapsed = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    // y0 = x0 + sum c_i x_i, other coordinates unchanged.
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<FieldElement> c(n, FieldElement(0));
    for (int i = 1; i < n; ++i) c[i] = attempt == 0 ? FieldElement(i + 1) : FieldElement(d(rng));
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(MultiPoly::var(vars, i));
    for (int i = 1; i < n; ++i) images[0] -= MultiPoly::var(vars, i).scaled(c[i]);
    std::vector<MultiPoly> ys;
    for (const auto& p : eqs) ys.push_back(substitute(p, images));
    MultiPoly e = eliminant(ys, 0, rng);
    if (e.is_zero()) {
      if (++collapsed >= 3) {
        empty_result.positive_dimensional = true;
        return empty_result;
      }
      continue;
    }
    if (e.is_constant()) return empty_result;
    SolveResult out;
    try {
      for (const auto& root : roots_q(squarefree_part(to_qpoly(e, 0))))
        extend(ys, root.coords, root.cluster, rng, out);
    } catch (const ShapeFailure&) {
      continue;
    }
    for (auto& pt : out.points) {
      FieldElement x0 = pt.coords[0];
      for (int i = 1; i < n; ++i) x0 -= c[i] * pt.coords[i];
      pt.coords[0] = x0;
    }
    return out;
  }
  throw MathError("singular-point solver could not reach general position");
}

std::vector<QuadraticLift> adjoin_sqrt(const QPoly& m, const QPoly& d) {
  // gamma = theta + c*delta has minimal polynomial dividing Res_t(m(t), (x-t)^2 - c^2 d(t)).
  auto vars = make_vars({"x", "t"});
  MultiPoly x = MultiPoly::var(vars, 0), t = MultiPoly::var(vars, 1);
  MultiPoly mt = from_kpoly(vars, 1, to_kpoly(m)), dt = from_kpoly(vars, 1, to_kpoly(d));
  for (long c = 1; c < 50; ++c) {
    MultiPoly rel = (x - t).pow(2) - dt.scaled(FieldElement(c * c));
    QPoly r = to_qpoly(resultant(mt, rel, 1), 0);
    if (deg(squarefree_part(r)) != deg(r)) continue;
    std::vector<QuadraticLift> out;
    for (const auto& [f, mult] : factor_q(r)) {
      (void)mult;
      FieldElement gamma;
      if (deg(f) == 1) {
        gamma = FieldElement(Rational(-f[0]));
      } else {
        gamma = FieldElement::generator(make_field_unchecked(f, "g"));
      }
      // theta is the common root of m(t) and (gamma - t)^2 - c^2 d(t) in Q(gamma).
      KPoly mk = to_kpoly(m), rk;
      KPoly lin{gamma, FieldElement(-1)};
      rk = sub(mul(lin, lin), scale(to_kpoly(d), FieldElement(c * c)));
      KPoly g = gcd(mk, rk);
      if (deg(g) != 1) throw MathError("primitive element did not separate the square roots");
      FieldElement theta = -g[0];
      FieldElement delta = (gamma - theta) / FieldElement(c);
      out.push_back({theta, delta, deg(f)});
    }
    return out;
  }
  throw MathError("no separating primitive element found");
}

}  // namespace dpgit
