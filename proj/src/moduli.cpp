#include "dpgit/moduli.hpp"

#include "dpgit/errors.hpp"

#ifndef DPGIT_QUINTIC_DIVISOR_C
#error "DPGIT_QUINTIC_DIVISOR_C must come from data/invariant_constants.txt"
#endif

namespace dpgit {

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

MultiPoly diff(const MultiPoly& f, int ax, int ay) {
  MultiPoly r = f;
  for (int i = 0; i < ax; ++i) r = r.derivative(0);
  for (int i = 0; i < ay; ++i) r = r.derivative(1);
  return r;
}

int form_degree(const MultiPoly& f) {
  if (f.is_zero()) return -1;
  return f.total_degree();
}

// Largest t with t^k | n for a positive integer n; returns (root, remaining k-free part).
std::pair<Integer, Integer> kth_power_split(Integer n, int k) {
  Integer root = 1, rest = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / k; ++i) root *= p;
    for (int i = 0; i < e % k; ++i) rest *= p;
  }
  if (n > 1) {
    if (k == 1) root *= n;
    else rest *= n;
  }
  return {root, rest};
}

}  // namespace

MultiPoly transvectant(const MultiPoly& f, const MultiPoly& g, int k) {
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.vars_ptr());
  const int m = form_degree(f), n = form_degree(g);
  if (k > m || k > n) return MultiPoly(f.vars_ptr());
  MultiPoly sum(f.vars_ptr());
  for (int i = 0; i <= k; ++i) {
    MultiPoly term = diff(f, k - i, i) * diff(g, i, k - i);
    Rational c(binom(k, i));
    if (i % 2) c = -c;
    sum += term.scaled(FieldElement(c));
  }
  Rational norm(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
  norm.canonicalize();
  return sum.scaled(FieldElement(norm));
}

ModuliPoint123 ModuliPoint123::canonical(std::array<Rational, 3> z) {
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (sgn(z[i]) != 0) {
      first = i;
      break;
    }
  if (first < 0) throw MathError("the zero vector is not a point of P(1,2,3)");
  const int w = first + 1;
  // Find t > 0 rational with t^w |z_w| = k-free integer.
  Rational a = abs(z[first]);
  // a = p/q; multiply by q^w to clear the denominator: a q^w = p q^(w-1), an integer.
  Integer q = a.get_den(), p = a.get_num();
  Integer scaled = p;
  for (int i = 1; i < w; ++i) scaled *= q;
  auto [root, rest] = kth_power_split(scaled, w);
  // t = q / root brings a to rest when w = 1 (rest = 1) and to the w-free part otherwise.
  Rational t(q, root);
  t.canonicalize();
  ModuliPoint123 out;
  Rational tp = 1;
  for (int i = 0; i < 3; ++i) {
    tp *= t;
    out.z[i] = z[i] * tp;
  }
  return out;
}

std::string ModuliPoint123::to_string() const {
  return "[" + rational_to_string(z[0]) + ":" + rational_to_string(z[1]) + ":" + rational_to_string(z[2]) + "]";
}

MultiPoly pencil_to_quintic(const QuadricPencil& P) {
  MultiPoly q = pencil_determinant(P);
  if (q.is_zero()) throw MathError("degenerate pencil");
  return q;
}

QuinticInvariants quintic_invariants(const MultiPoly& f) {
  if (f.is_zero()) throw MathError("quintic is zero");
  if (f.nvars() != 2) throw MathError("binary quintic needs two variables");
  auto wd = weighted_degree(f, WeightSystem{{1, 1}});
  if (!wd.homogeneous || wd.degrees.front() != 5) throw MathError("binary quintic must be homogeneous of degree 5");
  MultiPoly i = transvectant(f, f, 4);
  MultiPoly j = transvectant(f, i, 2);
  MultiPoly tau = transvectant(j, j, 2);
  auto scalar = [](const MultiPoly& p) {
    FieldElement c = p.constant_term();
    return c.rational();
  };
  QuinticInvariants out;
  out.I4 = scalar(transvectant(i, i, 2));
  out.I8 = scalar(transvectant(i, tau, 2));
  out.I12 = scalar(transvectant(tau, tau, 2));
  if (sgn(out.I4) == 0 && sgn(out.I8) == 0 && sgn(out.I12) == 0) {
    out.point.z = {0, 0, 0};  // nullform: no point of P(1,2,3)
  } else {
    out.point = ModuliPoint123::canonical({out.I4, out.I8, out.I12});
  }
  return out;
}

Rational quintic_divisor_constant() {
  static const Rational c(DPGIT_QUINTIC_DIVISOR_C);
  return c;
}

bool divisor_check_deg4(const ModuliPoint123& m) {
  return sgn(m.z[0] * m.z[0] - quintic_divisor_constant() * m.z[1]) == 0;
}

bool divisor_check_deg3(const std::array<Rational, 5>& z) {
  Rational a = z[0] * z[0] - 64 * z[1];
  Rational b = 8 * z[3] + z[0] * z[2];
  return sgn(a * a - 2048 * b) == 0;
}

namespace {

MultiPoly lift(const MultiPoly& g, const VarsPtr& vars) {
  if (g.is_zero()) return MultiPoly(vars);
  return change_ring(g, vars);
}

}  // namespace

BlowupResult blowup_substitution(const MultiPoly& g4, const MultiPoly& g6, const Rational& t) {
  if (sgn(t) == 0) throw MathError("t must be nonzero");
  const auto& bvars = g4.is_zero() ? g6.vars_ptr() : g4.vars_ptr();
  if (bvars->size() != 2) throw MathError("g4 and g6 must be binary forms");
  auto rename = make_vars({bvars->at(0), bvars->at(1), "z"});
  MultiPoly G4 = lift(g4, rename), G6 = lift(g6, rename);
  MultiPoly x = MultiPoly::var(rename, 0), y = MultiPoly::var(rename, 1), z = MultiPoly::var(rename, 2);
  const FieldElement T(t);
  MultiPoly s = x * x + y * y;
  BlowupResult r;
  r.f4 = s.pow(2).scaled(-T * T / FieldElement(3)) + G4.scaled(T * T * T);
  r.f6 = s.pow(3).scaled(FieldElement(2) * T * T * T / FieldElement(27)) - (s * G4).scaled(T * T * T * T / FieldElement(3)) +
         G6.scaled(T * T * T * T * T);
  // Identity: substituting x' = tx, y' = ty, z' = z - (t/3)s into
  // t z'^3 + z'^2 (x'^2 + y'^2) + z' g4(x', y') + g6(x', y') gives t (z^3 + f4 z + f6).
  std::vector<MultiPoly> images{x.scaled(T), y.scaled(T), z - s.scaled(T / FieldElement(3))};
  MultiPoly lhs = z.pow(3).scaled(T) + z.pow(2) * (x * x + y * y) + z * G4 + G6;
  lhs = substitute(lhs, images);
  MultiPoly rhs = (z.pow(3) + r.f4 * z + r.f6).scaled(T);
  if (lhs != rhs) throw std::logic_error("blow-up identity failed");
  r.f4 = change_ring(r.f4, bvars);
  r.f6 = change_ring(r.f6, bvars);
  return r;
}

BlowupResult blowup_limit(const MultiPoly& g4, const MultiPoly& g6) {
  const auto& bvars = g4.is_zero() ? g6.vars_ptr() : g4.vars_ptr();
  MultiPoly x = MultiPoly::var(bvars, 0), y = MultiPoly::var(bvars, 1);
  MultiPoly s = x * x + y * y;
  return {s.pow(2).scaled(FieldElement(Rational(-1, 3))), s.pow(3).scaled(FieldElement(Rational(2, 27)))};
}

}  // namespace dpgit
