#pragma once
// Independent reference computations. They share no code with the library
// beyond the polynomial container.
#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "dpgit/field.hpp"
#include "dpgit/poly.hpp"
#include "dpgit/types.hpp"

namespace dpgit::oracle {

// 1/n(1,a) is 1/(d m^2)(1, d m b - 1) for some d, m, b with gcd(b, m) = 1, in either orientation.
inline bool is_t(long n, long a) {
  long inv = 1;
  while ((a * inv) % n != 1 % n) ++inv;
  for (long m = 1; m * m <= n; ++m) {
    if (n % (m * m)) continue;
    const long d = n / (m * m);
    for (long b = 1; b <= m; ++b) {
      if (std::gcd(b, m) != 1) continue;
      const long q = ((d * m * b - 1) % n + n) % n;
      if (q == a || q == inv) return true;
    }
  }
  return false;
}

// b1 - 1/(b2 - 1/(...))
inline Rational hj_value(const std::vector<long>& b) {
  Rational v = b.back();
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) v = Rational(*it) - 1 / v;
  return v;
}

inline std::vector<std::array<long, 3>> markov_brute(long bound) {
  std::vector<std::array<long, 3>> out;
  for (long a = 1; a <= bound; ++a)
    for (long b = 1; b <= bound; ++b)
      for (long c = 1; c <= bound; ++c)
        if (a * a + b * b + 2 * c * c == 4 * a * b * c) out.push_back({a, b, c});
  return out;
}

// Local orbifold group orders and T-singularities from the definitions only.
inline std::vector<SingularityType> menu(int d) {
  std::vector<SingularityType> out;
  for (int k = 1; (k + 1) * d < 12; ++k) out.push_back(SingularityType::A(k));
  for (int k = 4; 4 * (k - 2) * d < 12; ++k) out.push_back(SingularityType::D(k));
  const std::array<std::pair<int, int>, 3> es{{{6, 24}, {7, 48}, {8, 120}}};
  for (auto [k, order] : es)
    if (order * d < 12) out.push_back(SingularityType::E(k));
  for (long n = 2; n * d < 12; ++n)
    for (long a = 1; a < n - 1; ++a) {
      if (std::gcd(a, n) != 1) continue;
      long inv = 1;
      while ((a * inv) % n != 1) ++inv;
      if (inv < a) continue;  // count each point once
      if (is_t(n, a)) out.push_back(SingularityType::cyclic(static_cast<int>(n), static_cast<int>(a)));
    }
  return out;
}

// Some lam in [-bound, bound]^r pairs strictly positively with every support vector.
inline bool destabilizing_1ps_in_box(const std::vector<std::vector<long>>& support, long bound) {
  const size_t r = support.front().size();
  std::vector<long> lam(r, -bound);
  for (;;) {
    bool ok = true;
    for (const auto& s : support) {
      long w = 0;
      for (size_t i = 0; i < r; ++i) w += lam[i] * s[i];
      if (w <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    size_t i = 0;
    while (i < r && lam[i] == bound) lam[i++] = -bound;
    if (i == r) return false;
    ++lam[i];
  }
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline MultiPoly nth_derivative(MultiPoly f, int i, int k) {
  for (int j = 0; j < k; ++j) f = f.derivative(i);
  return f;
}

// Omega process on binary forms of degrees m, n.
inline MultiPoly transvectant(const MultiPoly& f, const MultiPoly& g, int k) {
  const int m = f.total_degree(), n = g.total_degree();
  MultiPoly out(f.vars_ptr());
  Rational binom = 1;
  for (int i = 0; i <= k; ++i) {
    MultiPoly term = nth_derivative(nth_derivative(f, 0, k - i), 1, i) * nth_derivative(nth_derivative(g, 0, i), 1, k - i);
    out += term.scaled(FieldElement(i % 2 ? Rational(-binom) : binom));
    binom = binom * (k - i) / (i + 1);
  }
  return out.scaled(FieldElement(factorial(m - k) * factorial(n - k) / (factorial(m) * factorial(n))));
}

struct Invariants {
  Rational I4, I8, I12;
};

inline Invariants quintic_invariants(const MultiPoly& f) {
  const MultiPoly i = oracle::transvectant(f, f, 4);
  const MultiPoly j = oracle::transvectant(f, i, 2);
  const MultiPoly tau = oracle::transvectant(j, j, 2);
  auto value = [](const MultiPoly& c) { return c.is_zero() ? Rational(0) : c.constant_term().rational(); };
  return {value(oracle::transvectant(i, i, 2)), value(oracle::transvectant(i, tau, 2)), value(oracle::transvectant(tau, tau, 2))};
}

}  // namespace dpgit::oracle
