#include "dpgit/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dpgit {
namespace detail {
namespace {

// ---------- arithmetic in F_p[x], p < 2^31 ----------
using PP = std::vector<long>;

long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long powm(long b, long e, long p) {
  long r = 1;
  b = md(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long invm(long a, long p) { return powm(a, p - 2, p); }

void trimp(PP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PP subp(const PP& a, const PP& b, long p) {
  PP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
  trimp(r);
  return r;
}

PP mulp(const PP& a, const PP& b, long p) {
  if (a.empty() || b.empty()) return {};
  PP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trimp(r);
  return r;
}

std::pair<PP, PP> divmodp(PP a, const PP& b, long p) {
  trimp(a);
  if (a.size() < b.size()) return {{}, a};
  PP q(a.size() - b.size() + 1, 0);
  long inv = invm(b.back(), p);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    long c = a[i] * inv % p;
    if (!c) continue;
    int sh = i - static_cast<int>(b.size()) + 1;
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j) a[sh + j] = md(a[sh + j] - c * b[j], p);
  }
  trimp(q);
  trimp(a);
  return {q, a};
}

PP monicp(const PP& a, long p) {
  if (a.empty()) return a;
  long inv = invm(a.back(), p);
  PP r(a);
  for (auto& c : r) c = c * inv % p;
  return r;
}

PP gcdp(PP a, PP b, long p) {
  trimp(a);
  trimp(b);
  while (!b.empty()) {
    PP r = divmodp(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monicp(a, p);
}

PP derivp(const PP& a, long p) {
  if (a.size() <= 1) return {};
  PP r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i % p) % p;
  trimp(r);
  return r;
}

PP powmodp(PP b, Integer e, const PP& f, long p) {
  PP r{1};
  b = divmodp(b, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = divmodp(mulp(r, b, p), f, p).second;
    b = divmodp(mulp(b, b, p), f, p).second;
    e >>= 1;
  }
  return r;
}

void equal_degree_split(const PP& g, int d, long p, std::mt19937_64& rng, std::vector<PP>& out) {
  if (static_cast<int>(g.size()) - 1 == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  for (;;) {
    PP a(g.size() - 1);
    for (auto& c : a) c = dist(rng);
    trimp(a);
    if (a.size() <= 1) continue;
    PP b = powmodp(a, e, g, p);
    b = subp(b, PP{1}, p);
    PP h = gcdp(b, g, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < static_cast<int>(g.size()) - 1) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divmodp(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---------- arithmetic in (Z/M)[x] ----------
using ZP = std::vector<Integer>;

void trimz(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP modz(ZP a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trimz(a);
  return a;
}

ZP symmetric(ZP a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trimz(a);
  return a;
}

ZP addz(const ZP& a, const ZP& b) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trimz(r);
  return r;
}

ZP subz(const ZP& a, const ZP& b) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trimz(r);
  return r;
}

ZP mulz(const ZP& a, const ZP& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return modz(r, m);
}

// b monic mod m
std::pair<ZP, ZP> divmodz(ZP a, const ZP& b, const Integer& m) {
  a = modz(a, m);
  if (a.size() < b.size()) return {{}, a};
  ZP q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    Integer c = a[i] % m;
    if (c < 0) c += m;
    if (c == 0) continue;
    int sh = i - static_cast<int>(b.size()) + 1;
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
  }
  return {modz(q, m), modz(a, m)};
}

ZP from_pp(const PP& a) {
  ZP r;
  for (long c : a) r.emplace_back(c);
  trimz(r);
  return r;
}

PP to_pp(const ZP& a, long p) {
  PP r;
  for (const auto& c : a) {
    Integer x = c % p;
    if (x < 0) x += p;
    r.push_back(x.get_si());
  }
  trimp(r);
  return r;
}

// Quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m, h monic) to modulus m^2.
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const Integer& m) {
  Integer m2 = m * m;
  ZP e = modz(subz(f, mulz(g, h, m2)), m2);
  auto [q, r] = divmodz(mulz(s, e, m2), h, m2);
  ZP gs = modz(addz(addz(g, mulz(t, e, m2)), mulz(q, g, m2)), m2);
  ZP hs = modz(addz(h, r), m2);
  ZP b = modz(subz(addz(mulz(s, gs, m2), mulz(t, hs, m2)), ZP{Integer(1)}), m2);
  auto [c, d] = divmodz(mulz(s, b, m2), hs, m2);
  ZP ss = modz(subz(s, d), m2);
  ZP ts = modz(subz(subz(t, mulz(t, b, m2)), mulz(c, gs, m2)), m2);
  g = std::move(gs);
  h = std::move(hs);
  s = std::move(ss);
  t = std::move(ts);
}

Integer content(const ZP& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZP primitive(ZP a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// exact division over Z, empty optional if not divisible
bool divides_z(const ZP& g, const ZP& f, ZP& quot) {
  ZP a = f;
  if (a.size() < g.size()) return false;
  ZP q(a.size() - g.size() + 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
    if (a[i] == 0) continue;
    if (a[i] % g.back() != 0) return false;
    Integer c = a[i] / g.back();
    int sh = i - static_cast<int>(g.size()) + 1;
    q[sh] = c;
    for (size_t j = 0; j < g.size(); ++j) a[sh + j] -= c * g[j];
  }
  trimz(a);
  if (!a.empty()) return false;
  trimz(q);
  quot = q;
  return true;
}

std::vector<long> small_primes() {
  std::vector<long> ps;
  const int n = 20000;
  std::vector<bool> sieve(n, true);
  for (int i = 2; i < n; ++i) {
    if (!sieve[i]) continue;
    if (i > 2) ps.push_back(i);
    for (int j = 2 * i; j < n; j += i) sieve[j] = false;
  }
  return ps;
}

}  // namespace

std::vector<std::vector<long>> factor_mod_p(const std::vector<long>& f0, long p) {
  PP f = monicp(f0, p);
  std::vector<PP> out;
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(p));
  PP h{0, 1};
  const PP x{0, 1};
  int d = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = powmodp(h, Integer(p), f, p);
    PP g = gcdp(subp(h, x, p), f, p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = divmodp(f, g, p).first;
      h = divmodp(h, f, p).second;
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PP& a, const PP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f_in) {
  ZP f = primitive(f_in);
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const Integer lc = f.back();

  static const std::vector<long> primes = small_primes();
  long best_p = 0;
  std::vector<PP> best;
  int tried = 0;
  for (long p : primes) {
    if (lc % p == 0) continue;
    PP fp = to_pp(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (gcdp(fp, derivp(fp, p), p).size() != 1) continue;
    auto fac = factor_mod_p(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = fac;
    }
    if (++tried == 3 || best.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};
  const long p = best_p;

  // coefficient bound for lc * (any factor)
  Integer norm2sq = 0;
  for (const auto& c : f) norm2sq += c * c;
  Integer norm2 = sqrt(norm2sq) + 1;
  Integer bound = 2 * abs(lc) * norm2;
  bound <<= n;
  Integer P = p;
  while (P <= bound) P *= P;

  // sequential quadratic lifting
  std::vector<ZP> lifted;
  ZP F = modz(f, P);
  for (size_t i = 0; i + 1 < best.size(); ++i) {
    PP rest{md(Integer(F.back() % p).get_si(), p)};
    for (size_t j = i + 1; j < best.size(); ++j) rest = mulp(rest, best[j], p);
    PP hp = best[i];
    PP gp = rest;
    // s*g + t*h = 1 mod p
    PP a = gp, b = hp, s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
      auto [q, r] = divmodp(a, b, p);
      a = b;
      b = r;
      PP s2 = subp(s0, mulp(q, s1, p), p);
      PP t2 = subp(t0, mulp(q, t1, p), p);
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    long inv = invm(a[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    ZP g = from_pp(gp), h = from_pp(hp), s = from_pp(s0), t = from_pp(t0);
    Integer m = p;
    while (m < P) {
      hensel_step(F, g, h, s, t, m);
      m *= m;
    }
    lifted.push_back(h);
    F = g;
  }
  {
    Integer lcF = F.back();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lcF.get_mpz_t(), P.get_mpz_t());
    ZP last = F;
    for (auto& c : last) c *= inv;
    lifted.push_back(modz(last, P));
  }

  // recombination by trial division
  std::vector<ZP> result;
  std::vector<ZP> T = lifted;
  ZP fstar = f;
  size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      Integer b = fstar.back();
      ZP g{b};
      for (size_t k : idx) g = mulz(g, T[k], P);
      g = primitive(symmetric(g, P));
      ZP quot;
      if (divides_z(g, fstar, quot)) {
        result.push_back(g);
        fstar = primitive(quot);
        std::vector<ZP> rest;
        for (size_t k = 0; k < T.size(); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(T[k]);
        T = std::move(rest);
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == T.size() - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (fstar.size() > 1) result.push_back(fstar);
  return result;
}

}  // namespace detail

namespace {

// primitive integer polynomial with the same roots
detail::ZPoly to_z(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) den = lcm(den, Integer(c.get_den()));
  detail::ZPoly r;
  for (const auto& c : f) r.push_back(Integer(c * den));
  Integer g = 0;
  for (const auto& c : r) g = gcd(g, c);
  if (g != 0)
    for (auto& c : r) c /= g;
  return r;
}

QPoly to_monic_q(const detail::ZPoly& z) {
  QPoly r;
  for (const auto& c : z) r.emplace_back(c);
  trim(r);
  return monic(r);
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_q(const QPoly& f_in) {
  QPoly f(f_in);
  trim(f);
  std::vector<std::pair<QPoly, int>> out;
  if (deg(f) < 1) return out;
  auto sqf = squarefree_decomposition(f);
  for (size_t i = 0; i < sqf.size(); ++i) {
    QPoly g = sqf[i];
    if (deg(g) < 1) continue;
    int mult = static_cast<int>(i) + 1;
    // peel off x
    if (sgn(g[0]) == 0) {
      out.push_back({QPoly{Rational(0), Rational(1)}, mult});
      g = divmod(g, QPoly{Rational(0), Rational(1)}).first;
      if (deg(g) < 1) continue;
    }
    for (const auto& z : detail::factor_squarefree_z(to_z(g))) out.push_back({to_monic_q(z), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (size_t i = a.first.size(); i-- > 0;)
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_q(const QPoly& f) {
  auto fac = factor_q(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace dpgit
