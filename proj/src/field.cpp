#include "dpgit/field.hpp"

#include <sstream>

#include "dpgit/factor.hpp"
#include "dpgit/upoly.hpp"

namespace dpgit {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

FieldPtr make_field_unchecked(std::vector<Rational> minpoly, std::string name) {
  QPoly m(std::move(minpoly));
  trim(m);
  if (deg(m) < 2) throw MathError("extension minimal polynomial must have degree >= 2");
  if (m.back() != 1) throw MathError("extension minimal polynomial must be monic");
  auto k = std::make_shared<NumberField>();
  k->minpoly = std::move(m);
  k->name = std::move(name);
  return k;
}

FieldPtr make_field(std::vector<Rational> minpoly, std::string name) {
  auto k = make_field_unchecked(std::move(minpoly), std::move(name));
  if (!is_irreducible_q(k->minpoly)) throw MathError("extension minimal polynomial is reducible over Q");
  return k;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly == b->minpoly;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_field(a, b)) return a;
  throw MathError("towers of algebraic extensions are not supported");
}

FieldElement::FieldElement(FieldPtr k, std::vector<Rational> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
  reduce();
}

FieldElement FieldElement::generator(const FieldPtr& k) { return FieldElement(k, {Rational(0), Rational(1)}); }

void FieldElement::reduce() {
  for (auto& c : c_) c.canonicalize();
  if (!k_) {
    c_.resize(1);
    return;
  }
  const auto& m = k_->minpoly;
  const int n = k_->degree();
  for (int i = static_cast<int>(c_.size()) - 1; i >= n; --i) {
    if (sgn(c_[i]) == 0) continue;
    Rational c = c_[i];
    for (int j = 0; j <= n; ++j) c_[i - n + j] -= c * m[j];
  }
  c_.resize(n);
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational FieldElement::rational() const {
  if (!is_rational()) throw MathError("expected a rational number");
  return c_[0];
}

FieldElement FieldElement::promoted(const FieldPtr& k) const {
  if (same_field(k_, k)) return *this;
  if (k_ && !is_rational()) throw MathError("towers of algebraic extensions are not supported");
  FieldElement r;
  r.k_ = k;
  r.c_.assign(k->degree(), Rational(0));
  r.c_[0] = c_[0];
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (!same_field(k_, o.k_)) {
    if (o.is_rational()) {
      c_[0] += o.c_[0];
      return *this;
    }
    auto k = join_fields(is_rational() ? nullptr : k_, o.k_);
    *this = promoted(k);
    return *this += o;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (!same_field(k_, o.k_)) {
    if (o.is_rational()) {
      c_[0] -= o.c_[0];
      return *this;
    }
    auto k = join_fields(is_rational() ? nullptr : k_, o.k_);
    *this = promoted(k);
    return *this -= o;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!k_ && !o.k_) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (!o.k_ || o.is_rational()) {
    Rational s = o.c_[0];
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (!k_ || is_rational()) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  auto k = join_fields(k_, o.k_);
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  k_ = k;
  c_ = std::move(prod);
  reduce();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (!k_ || is_rational()) {
    FieldElement r(*this);
    Rational inv = 1 / c_[0];
    for (auto& c : r.c_) c = 0;
    r.c_[0] = inv;
    return r;
  }
  QPoly a(c_);
  trim(a);
  auto [g, s, t] = xgcd(a, k_->minpoly);
  (void)t;
  if (deg(g) != 0) throw MathError("element is not invertible (minimal polynomial reducible)");
  return FieldElement(k_, s);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (same_field(a.k_, b.k_)) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  return false;
}

std::string FieldElement::to_string(bool parenthesize) const {
  if (!k_ || is_rational()) {
    std::string s = rational_to_string(c_[0]);
    if (parenthesize && (s.find('/') != std::string::npos || s[0] == '-')) return "(" + s + ")";
    return s;
  }
  std::ostringstream os;
  bool first = true;
  int nterms = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    ++nterms;
    Rational c = c_[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << k_->name;
    if (i > 1) os << "^" << i;
  }
  std::string s = os.str();
  if (parenthesize && nterms > 0) return "(" + s + ")";
  return s;
}

}  // namespace dpgit
