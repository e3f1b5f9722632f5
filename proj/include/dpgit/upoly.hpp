#pragma once
#include <tuple>
#include <utility>
#include <vector>

#include "dpgit/field.hpp"

namespace dpgit {

// Dense univariate polynomials, coefficients low to high, no trailing zeros.
template <class T>
using UPoly = std::vector<T>;
using QPoly = UPoly<Rational>;
using KPoly = UPoly<FieldElement>;

// Monic gcd over Q. Heuristic integer gcd with verification, Euclid as fallback;
// found by the templates below in preference to the generic Euclid.
QPoly gcd(QPoly a, QPoly b);

template <class T>
void trim(UPoly<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class T>
int deg(const UPoly<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class T>
UPoly<T> add(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class T>
UPoly<T> sub(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class T>
UPoly<T> mul(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<T> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
UPoly<T> scale(const UPoly<T>& a, const T& c) {
  UPoly<T> r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

// Quotient and remainder; b nonzero.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(UPoly<T> a, const UPoly<T>& b) {
  if (b.empty()) throw MathError("division by zero polynomial");
  trim(a);
  if (deg(a) < deg(b)) return {{}, a};
  UPoly<T> q(a.size() - b.size() + 1);
  const T inv = T(1) / b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    if (is_zero(a[i])) continue;
    T c = a[i] * inv;
    q[i - deg(b)] = c;
    for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {q, a};
}

template <class T>
UPoly<T> monic(const UPoly<T>& a) {
  if (a.empty()) return a;
  return scale(a, T(T(1) / a.back()));
}

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> xgcd(UPoly<T> a, UPoly<T> b) {
  UPoly<T> s0{T(1)}, s1{}, t0{}, t1{T(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    auto s2 = sub(s0, mul(q, s1));
    auto t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  T inv = T(1) / a.back();
  return {scale(a, inv), scale(s0, inv), scale(t0, inv)};
}

template <class T>
UPoly<T> derivative(const UPoly<T>& a) {
  if (a.size() <= 1) return {};
  UPoly<T> r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * T(static_cast<long>(i));
  trim(r);
  return r;
}

template <class T>
T eval(const UPoly<T>& a, const T& x) {
  T r(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

template <class T>
UPoly<T> squarefree_part(const UPoly<T>& a) {
  if (a.size() <= 1) return monic(a);
  return monic(divmod(a, gcd(a, derivative(a))).first);
}

// Yun's algorithm: result[i] is the monic product of factors of multiplicity i+1.
template <class T>
std::vector<UPoly<T>> squarefree_decomposition(const UPoly<T>& a) {
  std::vector<UPoly<T>> out;
  if (a.size() <= 1) return out;
  auto da = derivative(a);
  auto g = gcd(a, da);
  auto b = divmod(a, g).first;
  auto c = divmod(da, g).first;
  auto d = sub(c, derivative(b));
  while (deg(b) > 0) {
    auto f = gcd(b, d);
    out.push_back(f);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = sub(c, derivative(b));
  }
  while (!out.empty() && deg(out.back()) == 0) out.pop_back();
  return out;
}

// Rational coefficients, FieldElement view.
KPoly to_kpoly(const QPoly& p);

// Reduction helpers for Q[t]/(m).
QPoly poly_mod(const QPoly& a, const QPoly& m);

}  // namespace dpgit
