#pragma once
#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "dpgit/errors.hpp"

namespace dpgit {

using Integer = mpz_class;
using Rational = mpq_class;

// Q(alpha) with alpha a root of a monic irreducible polynomial.
struct NumberField {
  std::vector<Rational> minpoly;  // low to high, monic, degree >= 2
  std::string name;

  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Validates monic, degree >= 2 and irreducibility over Q.
FieldPtr make_field(std::vector<Rational> minpoly, std::string name = "a");
// Skips the irreducibility check (caller obtained minpoly from a factorization).
FieldPtr make_field_unchecked(std::vector<Rational> minpoly, std::string name = "a");

bool same_field(const FieldPtr& a, const FieldPtr& b);
// Field containing both; throws MathError for two distinct extensions.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
 public:
  FieldElement() : c_(1) {}
  FieldElement(long v) : c_{Rational(v)} {}  // NOLINT implicit by design
  FieldElement(int v) : c_{Rational(v)} {}   // NOLINT
  FieldElement(const Rational& v) : c_{v} { c_[0].canonicalize(); }  // NOLINT
  FieldElement(FieldPtr k, std::vector<Rational> coeffs);

  static FieldElement generator(const FieldPtr& k);

  const FieldPtr& field() const { return k_; }
  // coefficient vector, length 1 over Q or deg(m) over Q(alpha)
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // value lies in Q (even if stored in an extension)
  Rational rational() const; // throws unless is_rational()

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inverse() const;
  FieldElement promoted(const FieldPtr& k) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // "3/2", "a^2 - 1/3*a", "(a + 1)" when parenthesize and composite
  std::string to_string(bool parenthesize = false) const;

 private:
  void reduce();
  FieldPtr k_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const FieldElement& e) { return e.is_zero(); }

std::string rational_to_string(const Rational& r);

}  // namespace dpgit
