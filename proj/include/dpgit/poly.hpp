#pragma once
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpgit/field.hpp"
#include "dpgit/upoly.hpp"

namespace dpgit {

constexpr int kMaxVars = 8;
using Exponent = std::array<int, kMaxVars>;

int exponent_degree(const Exponent& e);

// Graded lex: total degree first, then the first variable is most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;
VarsPtr make_vars(VarList names);
bool same_vars(const VarsPtr& a, const VarsPtr& b);

// Integer weight per variable (negative entries allowed for 1-PS directions).
struct WeightSystem {
  std::vector<long> w;
  long weight(const Exponent& e) const;
  WeightSystem negated() const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, FieldElement, GrlexLess>;

  MultiPoly() : vars_(make_vars({})) {}
  explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}
  MultiPoly(VarsPtr vars, const FieldElement& c);
  static MultiPoly var(const VarsPtr& vars, int i);
  static MultiPoly monomial(const VarsPtr& vars, const Exponent& e, const FieldElement& c);

  const VarsPtr& vars_ptr() const { return vars_; }
  const VarList& vars() const { return *vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  int var_index(const std::string& name) const;
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement coeff(const Exponent& e) const;
  FieldElement constant_term() const;
  void add_term(const Exponent& e, const FieldElement& c);

  int total_degree() const;  // -1 for zero
  int order() const;         // lowest total degree, -1 for zero
  int degree_in(int v) const;
  bool involves(int v) const { return degree_in(v) > 0; }
  FieldPtr field() const;
  std::pair<Exponent, FieldElement> leading_term() const;

  const std::optional<std::vector<int>>& weights() const { return weights_; }
  void set_weights(std::optional<std::vector<int>> w) { weights_ = std::move(w); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly pow(int k) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const FieldElement& c, const MultiPoly& p) { return p.scaled(c); }
  friend MultiPoly operator*(const MultiPoly& p, const FieldElement& c) { return p.scaled(c); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(int v) const;
  MultiPoly truncated(int max_degree) const;  // drop terms of total degree > max_degree
  MultiPoly homogeneous_part(int d) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  // coefficient list with respect to v; entry k multiplies v^k and does not involve v
  std::vector<MultiPoly> coefficients_in(int v) const;
  MultiPoly monic() const;  // grlex leading coefficient 1

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& o) const;
  VarsPtr vars_;
  TermMap terms_;
  std::optional<std::vector<int>> weights_;
};

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree);

struct WeightedDegree {
  bool homogeneous = false;
  std::vector<long> degrees;  // single entry when homogeneous, else sorted distinct
};
WeightedDegree weighted_degree(const MultiPoly& p, const WeightSystem& w);

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q);
// Sylvester resultant eliminating var; p's coefficients fill the top rows.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, const VarsPtr& vars);

// images[i] replaces variable i; all images share the target ring.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int max_degree = -1);
// Partial map by variable name; unmapped variables stay.
MultiPoly substitute_linear(const MultiPoly& p, const std::map<std::string, MultiPoly>& map);
MultiPoly specialize(const MultiPoly& p, int var, const FieldElement& value);
// Same polynomial viewed in another ring; variables matched by name.
MultiPoly change_ring(const MultiPoly& p, const VarsPtr& target);

struct DegenerationLimit {
  MultiPoly limit;
  long weight = 0;
};
DegenerationLimit degeneration_limit(const MultiPoly& p, const WeightSystem& lam);

// Univariate bridges (p may only involve v).
KPoly to_kpoly(const MultiPoly& p, int v);
QPoly to_qpoly(const MultiPoly& p, int v);
MultiPoly from_kpoly(const VarsPtr& vars, int v, const KPoly& u);

// Product of repeated factors (gcd with all partials); constant when squarefree.
MultiPoly repeated_part(const MultiPoly& p);

}  // namespace dpgit
