#include "dpgit/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dpgit {

int exponent_degree(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da < db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

VarsPtr make_vars(VarList names) {
  if (names.size() > static_cast<size_t>(kMaxVars)) throw MathError("too many variables");
  return std::make_shared<const VarList>(std::move(names));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) { return a == b || *a == *b; }

long WeightSystem::weight(const Exponent& e) const {
  long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

WeightSystem WeightSystem::negated() const {
  WeightSystem r{w};
  for (auto& x : r.w) x = -x;
  return r;
}

MultiPoly::MultiPoly(VarsPtr vars, const FieldElement& c) : vars_(std::move(vars)) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::var(const VarsPtr& vars, int i) {
  Exponent e{};
  e[i] = 1;
  return monomial(vars, e, FieldElement(1));
}

MultiPoly MultiPoly::monomial(const VarsPtr& vars, const Exponent& e, const FieldElement& c) {
  MultiPoly p(vars);
  p.add_term(e, c);
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if ((*vars_)[i] == name) return i;
  return -1;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0); }

FieldElement MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

FieldElement MultiPoly::constant_term() const { return coeff(Exponent{}); }

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : exponent_degree(terms_.rbegin()->first); }

int MultiPoly::order() const { return terms_.empty() ? -1 : exponent_degree(terms_.begin()->first); }

int MultiPoly::degree_in(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

FieldPtr MultiPoly::field() const {
  FieldPtr k;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) k = join_fields(k, c.field());
  return k;
}

std::pair<Exponent, FieldElement> MultiPoly::leading_term() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_vars(vars_, o.vars_)) throw MathError("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul_truncated(a, b, -1); }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& s) const {
  MultiPoly r(vars_);
  r.weights_ = weights_;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw MathError("negative power");
  MultiPoly r(vars_, FieldElement(1)), b(*this);
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_vars(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    r.add_term(f, c * FieldElement(static_cast<long>(e[v])));
  }
  return r;
}

MultiPoly MultiPoly::truncated(int max_degree) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (exponent_degree(e) > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (exponent_degree(e) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& pt) const {
  if (static_cast<int>(pt.size()) != nvars()) throw MathError("variable-count mismatch");
  FieldElement s(0);
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= pt[i];
    s += t;
  }
  return s;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int v) const {
  std::vector<MultiPoly> out(std::max(degree_in(v), 0) + 1, MultiPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    int k = f[v];
    f[v] = 0;
    out[k].add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.rbegin()->second.inverse());
}

namespace {

std::string monomial_string(const VarList& vars, const Exponent& e) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(*vars_, e);
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    FieldElement a = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << a.to_string(!a.is_rational());
    } else if (a.is_one()) {
      os << mono;
    } else {
      os << a.to_string(!a.is_rational()) << "*" << mono;
    }
  }
  return os.str();
}

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
  if (!same_vars(a.vars_ptr(), b.vars_ptr())) throw MathError("polynomials live in different rings");
  MultiPoly r(a.vars_ptr());
  for (const auto& [ea, ca] : a.terms()) {
    int da = exponent_degree(ea);
    if (max_degree >= 0 && da + b.order() > max_degree) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (max_degree >= 0 && da + exponent_degree(eb) > max_degree) break;
      Exponent e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

WeightedDegree weighted_degree(const MultiPoly& p, const WeightSystem& w) {
  if (p.is_zero()) throw MathError("zero polynomial has no degree");
  if (static_cast<int>(w.w.size()) != p.nvars()) throw MathError("weight vector length does not match variable count");
  for (long x : w.w)
    if (x <= 0) throw MathError("weighted degree needs positive weights");
  std::set<long> ds;
  for (const auto& [e, c] : p.terms()) ds.insert(w.weight(e));
  WeightedDegree r;
  r.homogeneous = ds.size() == 1;
  r.degrees.assign(ds.begin(), ds.end());
  return r;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (!same_vars(a.vars_ptr(), b.vars_ptr())) throw MathError("polynomials live in different rings");
  MultiPoly r = a, q(a.vars_ptr());
  const auto [lb, lc] = b.leading_term();
  const FieldElement inv = lc.inverse();
  while (!r.is_zero()) {
    const auto [lr, cr] = r.leading_term();
    Exponent e;
    for (int i = 0; i < kMaxVars; ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::monomial(a.vars_ptr(), e, cr * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

MultiPoly one_of(const MultiPoly& p) { return MultiPoly(p.vars_ptr(), FieldElement(1)); }

MultiPoly lc_in(const MultiPoly& p, int v) { return p.coefficients_in(v).back(); }

MultiPoly var_power(const VarsPtr& vars, int v, int k) {
  Exponent e{};
  e[v] = k;
  return MultiPoly::monomial(vars, e, FieldElement(1));
}

MultiPoly prem(MultiPoly a, const MultiPoly& b, int v) {
  const int db = b.degree_in(v);
  const MultiPoly lb = lc_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    MultiPoly la = lc_in(a, v);
    a = lb * a - la * var_power(a.vars_ptr(), v, da - db) * b;
  }
  return a;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

MultiPoly content_in(const MultiPoly& p, int v) {
  MultiPoly g(p.vars_ptr());
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return one_of(p);
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, int v) {
  MultiPoly c = content_in(p, v);
  if (c.is_constant()) return p;
  return *exact_divide(p, c);
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return one_of(p);
  int v = -1;
  for (int i = p.nvars() - 1; i >= 0; --i)
    if (p.involves(i) || q.involves(i)) {
      v = i;
      break;
    }
  bool univariate = true;
  for (int i = 0; i < v; ++i)
    if (p.involves(i) || q.involves(i)) univariate = false;
  if (univariate) {
    if (!p.field() && !q.field()) return from_kpoly(p.vars_ptr(), v, to_kpoly(gcd(to_qpoly(p, v), to_qpoly(q, v))));
    return from_kpoly(p.vars_ptr(), v, gcd(to_kpoly(p, v), to_kpoly(q, v)));
  }
  if (!p.involves(v)) return gcd_rec(p, content_in(q, v));
  if (!q.involves(v)) return gcd_rec(content_in(p, v), q);
  MultiPoly cp = content_in(p, v), cq = content_in(q, v);
  MultiPoly a = *exact_divide(p, cp), b = *exact_divide(q, cq);
  MultiPoly c = gcd_rec(cp, cq);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    MultiPoly r = prem(a, b, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      b = one_of(p);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v).monic();
  }
  if (b.involves(v)) b = primitive_in(b, v);
  return (c * b).monic();
}

}  // namespace

MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q) {
  if (!same_vars(p.vars_ptr(), q.vars_ptr())) throw MathError("polynomials live in different rings");
  if (p.is_zero() && q.is_zero()) throw MathError("gcd of two zero polynomials");
  return gcd_rec(p, q);
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, const VarsPtr& vars) {
  const size_t n = m.size();
  if (n == 0) return MultiPoly(vars, FieldElement(1));
  int sign = 1;
  MultiPoly prev(vars, FieldElement(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(vars);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto d = exact_divide(t, prev);
        if (!d) throw std::logic_error("Bareiss division not exact");
        m[i][j] = std::move(*d);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int v) {
  if (p.is_zero() || q.is_zero()) throw MathError("resultant of a zero polynomial");
  if (!same_vars(p.vars_ptr(), q.vars_ptr())) throw MathError("polynomials live in different rings");
  const int m = p.degree_in(v), n = q.degree_in(v);
  if (m == 0 && n == 0) return one_of(p);
  if (m == 0) return p.pow(n);
  if (n == 0) return q.pow(m);
  auto pc = p.coefficients_in(v), qc = q.coefficients_in(v);
  const int N = m + n;
  std::vector<std::vector<MultiPoly>> s(N, std::vector<MultiPoly>(N, MultiPoly(p.vars_ptr())));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
  return determinant(std::move(s), p.vars_ptr());
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  int v = p.var_index(var);
  if (v < 0) throw MathError("unknown variable " + var);
  return resultant(p, q, v);
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int max_degree) {
  if (static_cast<int>(images.size()) != p.nvars()) throw MathError("variable-count mismatch in substitution");
  if (images.empty()) return p;
  const VarsPtr& target = images[0].vars_ptr();
  for (const auto& im : images)
    if (!same_vars(im.vars_ptr(), target)) throw MathError("substitution images live in different rings");
  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    int d = std::max(p.degree_in(i), 0);
    powers[i].reserve(d + 1);
    powers[i].emplace_back(target, FieldElement(1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(mul_truncated(powers[i].back(), images[i], max_degree));
  }
  MultiPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t(target, c);
    for (int i = 0; i < p.nvars() && !t.is_zero(); ++i)
      if (e[i] > 0) t = mul_truncated(t, powers[i][e[i]], max_degree);
    r += t;
  }
  return r;
}

MultiPoly substitute_linear(const MultiPoly& p, const std::map<std::string, MultiPoly>& map) {
  std::vector<MultiPoly> images;
  VarsPtr target;
  for (const auto& [name, im] : map) {
    if (p.var_index(name) < 0) throw MathError("variable-count mismatch: unknown variable " + name);
    if (!target) target = im.vars_ptr();
    else if (!same_vars(target, im.vars_ptr())) throw MathError("substitution images live in different rings");
  }
  if (!target) return p;
  for (int i = 0; i < p.nvars(); ++i) {
    auto it = map.find(p.vars()[i]);
    if (it != map.end()) {
      images.push_back(it->second);
      continue;
    }
    MultiPoly id(target);
    int j = -1;
    for (int k = 0; k < static_cast<int>(target->size()); ++k)
      if ((*target)[k] == p.vars()[i]) j = k;
    if (j < 0) throw MathError("variable-count mismatch: " + p.vars()[i] + " missing from target ring");
    images.push_back(MultiPoly::var(target, j));
  }
  return substitute(p, images);
}

MultiPoly specialize(const MultiPoly& p, int v, const FieldElement& value) {
  MultiPoly r(p.vars_ptr());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    FieldElement t = c;
    for (int k = 0; k < e[v]; ++k) t *= value;
    f[v] = 0;
    r.add_term(f, t);
  }
  return r;
}

MultiPoly change_ring(const MultiPoly& p, const VarsPtr& target) {
  std::vector<int> map(p.nvars(), -1);
  for (int i = 0; i < p.nvars(); ++i) {
    for (int j = 0; j < static_cast<int>(target->size()); ++j)
      if ((*target)[j] == p.vars()[i]) map[i] = j;
  }
  MultiPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent f{};
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw MathError("variable " + p.vars()[i] + " missing from target ring");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

DegenerationLimit degeneration_limit(const MultiPoly& p, const WeightSystem& lam) {
  if (p.is_zero()) throw MathError("zero polynomial has no degeneration limit");
  if (static_cast<int>(lam.w.size()) != p.nvars()) throw MathError("weight vector length does not match variable count");
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long w = lam.weight(e);
    if (first || w < best) best = w;
    first = false;
  }
  DegenerationLimit out{MultiPoly(p.vars_ptr()), best};
  for (const auto& [e, c] : p.terms())
    if (lam.weight(e) == best) out.limit.add_term(e, c);
  out.limit.set_weights(p.weights());
  return out;
}

KPoly to_kpoly(const MultiPoly& p, int v) {
  KPoly r(std::max(p.degree_in(v), 0) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != v && e[i] != 0) throw MathError("polynomial is not univariate");
    r[e[v]] += c;
  }
  trim(r);
  return r;
}

QPoly to_qpoly(const MultiPoly& p, int v) {
  QPoly r;
  for (const auto& c : to_kpoly(p, v)) r.push_back(c.rational());
  trim(r);
  return r;
}

MultiPoly from_kpoly(const VarsPtr& vars, int v, const KPoly& u) {
  MultiPoly r(vars);
  for (size_t k = 0; k < u.size(); ++k) {
    Exponent e{};
    e[v] = static_cast<int>(k);
    r.add_term(e, u[k]);
  }
  return r;
}

MultiPoly repeated_part(const MultiPoly& p) {
  MultiPoly g = p;
  for (int v = 0; v < p.nvars() && !g.is_constant(); ++v) {
    MultiPoly d = p.derivative(v);
    if (d.is_zero()) continue;
    g = gcd_multi(g, d);
  }
  return g;
}

}  // namespace dpgit
