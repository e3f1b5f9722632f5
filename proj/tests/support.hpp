#pragma once
#include <random>
#include <string>
#include <vector>

#include "dpgit/document.hpp"
#include "dpgit/linalg.hpp"
#include "dpgit/poly.hpp"

namespace dpgit::test {

// "x,y" -> "ring P(1,1) vars x,y"
inline std::string plain_ring(const std::string& vars) {
  std::string w = "1";
  for (char c : vars)
    if (c == ',') w += ",1";
  return "ring P(" + w + ") vars " + vars;
}

inline MultiPoly poly(const std::string& vars, const std::string& expr) {
  return parse_document(plain_ring(vars) + "; poly " + expr).polys.at(0).poly;
}

inline MultiPoly poly_in(const std::string& ring, const std::string& expr) {
  return parse_document(ring + "; poly " + expr).polys.at(0).poly;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long range = 5, long max_den = 3) {
  Rational r(uniform(rng, -range, range), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

// Random form of degree d in the ring of `like`, every monomial present with probability ~density.
inline MultiPoly random_form(Rng& rng, const VarsPtr& vars, int d, double density = 1.0, long range = 5) {
  MultiPoly p(vars);
  const int n = static_cast<int>(vars->size());
  std::bernoulli_distribution keep(density);
  Exponent e{};
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      if (keep(rng)) p.add_term(e, FieldElement(Rational(uniform(rng, -range, range))));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return p;
}

inline Mat random_invertible(Rng& rng, int n, long range = 3) {
  for (;;) {
    Mat m(n, Vec(n));
    for (auto& row : m)
      for (auto& x : row) x = FieldElement(Rational(uniform(rng, -range, range)));
    if (!det(m).is_zero()) return m;
  }
}

// Product of random shears and a diagonal pair (t, 1/t): determinant one.
inline Mat random_sl2(Rng& rng) {
  auto elem = [&](bool upper) {
    Mat m = identity_matrix(2);
    m[upper ? 0 : 1][upper ? 1 : 0] = FieldElement(small_rational(rng, 3, 2));
    return m;
  };
  Rational t(uniform(rng, 1, 3), uniform(rng, 1, 3));
  Mat d = identity_matrix(2);
  d[0][0] = FieldElement(t);
  d[1][1] = FieldElement(Rational(1) / t);
  return matmul(matmul(elem(true), elem(false)), matmul(d, elem(true)));
}

}  // namespace dpgit::test
