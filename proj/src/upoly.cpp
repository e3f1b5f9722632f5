#include "dpgit/upoly.hpp"

namespace dpgit {

KPoly to_kpoly(const QPoly& p) {
  KPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

QPoly poly_mod(const QPoly& a, const QPoly& m) { return divmod(a, m).second; }

namespace {

using ZVec = std::vector<Integer>;

// Primitive integer multiple with positive leading coefficient.
ZVec primitive_z(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) den = lcm(den, Integer(c.get_den()));
  ZVec r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(Integer(c * den));
  Integer g = 0;
  for (const auto& c : r) g = gcd(g, c);
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

Integer max_abs(const ZVec& f) {
  Integer m = 0;
  for (const auto& c : f) m = std::max(m, Integer(abs(c)));
  return m;
}

Integer eval_z(const ZVec& f, const Integer& x) {
  Integer r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

bool divides_q(const QPoly& g, const QPoly& f) { return divmod(f, g).second.empty(); }

QPoly euclid(QPoly a, QPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return monic(b);
  if (b.empty()) return monic(a);
  if (deg(a) == 0 || deg(b) == 0) return {Rational(1)};
  const ZVec A = primitive_z(a), B = primitive_z(b);
  Integer xi = 2 * std::min(max_abs(A), max_abs(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer h = gcd(eval_z(A, xi), eval_z(B, xi));
    // Balanced xi-adic digits of h are the candidate's coefficients.
    QPoly cand;
    Integer rest = h;
    const Integer half = xi / 2;
    while (rest != 0) {
      Integer d = rest % xi;
      if (d < 0) d += xi;
      if (d > half) d -= xi;
      cand.emplace_back(d);
      rest = (rest - d) / xi;
    }
    trim(cand);
    if (!cand.empty()) {
      cand = monic(cand);
      // xi exceeds twice the smaller height, so a dividing candidate is the gcd.
      if (deg(cand) == 0 || (divides_q(cand, a) && divides_q(cand, b))) return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return euclid(std::move(a), std::move(b));
}

}  // namespace dpgit
