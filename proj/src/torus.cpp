#include "dpgit/torus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dpgit/errors.hpp"
#include "dpgit/lp.hpp"

namespace dpgit {

namespace {

// Visiting order of the box search: more than this many lattice points and we
// keep the LP certificate instead.
constexpr long kBoxBudget = 4'000'000;

int rank_of(const Support& s) {
  QMat m;
  for (const auto& v : s) m.emplace_back(v.begin(), v.end());
  return rank_q(m);
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) {
    if (r > std::numeric_limits<long>::max() / b) return std::numeric_limits<long>::max();
    r *= b;
  }
  return r;
}

IntVec decode(long idx, long b, int r) {
  IntVec lam(r);
  for (int k = r - 1; k >= 0; --k) {
    lam[k] = idx % (2 * b + 1) - b;
    idx /= 2 * b + 1;
  }
  return lam;
}

bool on_shell(const IntVec& lam, long b) {
  for (long x : lam)
    if (x == b || x == -b) return true;
  return false;
}

// Is 0 a convex combination of s? If so return a combination.
std::optional<QVec> zero_in_hull(const Support& s, int maximize = -1) {
  const int n = static_cast<int>(s.size()), r = static_cast<int>(s[0].size());
  QMat A(r + 1, QVec(n));
  QVec b(r + 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < r; ++k) A[k][i] = s[i][k];
    A[r][i] = 1;
  }
  b[r] = 1;
  QVec c(n, Rational(0));
  if (maximize >= 0) c[maximize] = 1;
  auto res = simplex_max(A, b, c);
  if (res.status != LPResult::Status::Optimal) return std::nullopt;
  return res.x;
}

// Integer separator from the LP: minimize |lam|_1 subject to <lam,s> >= 1.
IntVec lp_certificate(const Support& s) {
  const int n = static_cast<int>(s.size()), r = static_cast<int>(s[0].size());
  // variables: u (r), v (r), e (n)
  QMat A(n, QVec(2 * r + n, Rational(0)));
  QVec b(n, Rational(1)), c(2 * r + n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < r; ++k) {
      A[i][k] = s[i][k];
      A[i][r + k] = -s[i][k];
    }
    A[i][2 * r + i] = -1;
  }
  for (int k = 0; k < 2 * r; ++k) c[k] = -1;
  auto res = simplex_max(A, b, c);
  if (res.status != LPResult::Status::Optimal) throw MathError("separator LP failed on an unstable point");
  Integer den = 1;
  QVec lam(r);
  for (int k = 0; k < r; ++k) {
    lam[k] = res.x[k] - res.x[r + k];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lam[k].get_den_mpz_t());
  }
  IntVec out(r);
  Integer g = 0;
  std::vector<Integer> num(r);
  for (int k = 0; k < r; ++k) {
    Rational t = lam[k] * den;
    num[k] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[k].get_mpz_t());
  }
  for (int k = 0; k < r; ++k) {
    Integer q = num[k] / g;
    if (!q.fits_slong_p()) throw MathError("certificate entries overflow");
    out[k] = q.get_si();
  }
  return out;
}

}  // namespace

bool verify_certificate(const Support& s, const IntVec& lam) {
  for (const auto& v : s) {
    if (v.size() != lam.size()) return false;
    long dot = 0;
    for (size_t k = 0; k < v.size(); ++k) dot += v[k] * lam[k];
    if (dot < 1) return false;
  }
  return true;
}

std::optional<IntVec> certificate_at_norm_serial(const Support& s, long b) {
  const int r = static_cast<int>(s[0].size());
  const long total = ipow(2 * b + 1, r);
  for (long idx = 0; idx < total; ++idx) {
    IntVec lam = decode(idx, b, r);
    if (on_shell(lam, b) && verify_certificate(s, lam)) return lam;
  }
  return std::nullopt;
}

std::optional<IntVec> certificate_at_norm(const Support& s, long b) {
  const int r = static_cast<int>(s[0].size());
  const long total = ipow(2 * b + 1, r);
  long best = total;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (long idx = 0; idx < total; ++idx) {
    if (idx >= best) continue;
    IntVec lam = decode(idx, b, r);
    if (on_shell(lam, b) && verify_certificate(s, lam)) best = idx;
  }
  if (best == total) return std::nullopt;
  return decode(best, b, r);
}

bool has_certificate_in_box(const Support& s, long bound) {
  for (long b = 1; b <= bound; ++b)
    if (certificate_at_norm_serial(s, b)) return true;
  return false;
}

StabilityResult torus_stability_support(const Support& s) {
  if (s.empty()) throw MathError("empty support: the zero vector has no stability class");
  const size_t r = s[0].size();
  for (const auto& v : s)
    if (v.size() != r) throw MathError("weight vectors of different ranks");
  StabilityResult out;
  auto comb = zero_in_hull(s);
  if (!comb) {
    out.cls = Stability::Unstable;
    IntVec lam = lp_certificate(s);
    long bmax = 0;
    for (long x : lam) bmax = std::max(bmax, std::labs(x));
    long spent = 0;
    for (long b = 1; b <= bmax; ++b) {
      spent += ipow(2 * b + 1, static_cast<int>(r));
      if (spent > kBoxBudget) break;
      if (auto c = certificate_at_norm(s, b)) {
        lam = *c;
        break;
      }
    }
    out.certificate = lam;
    return out;
  }
  // 0 in relint iff each point can carry positive mass in some combination.
  std::vector<bool> positive(s.size(), false);
  auto mark = [&](const QVec& x) {
    for (size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) > 0) positive[i] = true;
  };
  mark(*comb);
  for (size_t i = 0; i < s.size(); ++i) {
    if (positive[i]) continue;
    auto x = zero_in_hull(s, static_cast<int>(i));
    if (x) mark(*x);
    if (!positive[i]) {
      out.cls = Stability::SemistableNotPolystable;
      return out;
    }
  }
  out.cls = rank_of(s) == static_cast<int>(r) ? Stability::Stable : Stability::PolystableNotStable;
  return out;
}

StabilityResult torus_stability(const TorusPoint& p) {
  if (p.coords.size() != p.weights.size()) throw MathError("coordinate count differs from weight count");
  Support s;
  for (size_t i = 0; i < p.coords.size(); ++i)
    if (!p.coords[i].is_zero()) s.push_back(p.weights[i]);
  if (s.empty()) throw MathError("empty support: the zero vector has no stability class");
  return torus_stability_support(s);
}

}  // namespace dpgit
