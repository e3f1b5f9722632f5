#include "dpgit/singular.hpp"

#include <algorithm>
#include <numeric>

#include "dpgit/errors.hpp"
#include "dpgit/factor.hpp"
#include "dpgit/linalg.hpp"
#include "dpgit/solve.hpp"

namespace dpgit {

namespace {

// Surface germs are expensive in three variables; start lower and double.
TruncationPolicy surface_policy(const TruncationPolicy& p) { return {std::max(4, p.start / 4), p.max}; }

VarsPtr drop_vars(const VarsPtr& vars, const std::vector<int>& keep) {
  VarList names;
  for (int i : keep) names.push_back(vars->at(i));
  return make_vars(names);
}

// Set the listed variables to values, then move to the ring of the kept ones.
MultiPoly restrict_to(const MultiPoly& p, const std::vector<std::pair<int, FieldElement>>& values,
                      const VarsPtr& target) {
  MultiPoly q = p;
  for (const auto& [i, v] : values) q = specialize(q, i, v);
  return change_ring(q, target);
}

MultiPoly shift(const MultiPoly& p, const std::vector<FieldElement>& at) {
  const auto& vars = p.vars_ptr();
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) images.push_back(MultiPoly::var(vars, i) + MultiPoly(vars, at[i]));
  return substitute(p, images);
}

std::string point_key(const std::vector<FieldElement>& pt) {
  std::string s;
  for (const auto& c : pt) s += c.to_string() + ";";
  return s;
}

void sort_points(std::vector<SingularPoint>& pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const SingularPoint& a, const SingularPoint& b) {
    return point_key(a.point) < point_key(b.point);
  });
}

// Points of the stratum x_0 = .. = x_{i-1} = 0, x_i = 1 where all eqs vanish.
// Returns false when the solution set is positive dimensional.
bool stratum_points(const std::vector<MultiPoly>& eqs, int i, std::vector<AlgebraicPoint>& out) {
  const auto& vars = eqs.front().vars_ptr();
  const int n = static_cast<int>(vars->size());
  std::vector<int> keep;
  for (int j = i + 1; j < n; ++j) keep.push_back(j);
  std::vector<std::pair<int, FieldElement>> vals;
  for (int j = 0; j < i; ++j) vals.emplace_back(j, FieldElement(0));
  vals.emplace_back(i, FieldElement(1));
  if (keep.empty()) {
    for (const auto& p : eqs) {
      MultiPoly q = p;
      for (const auto& [j, v] : vals) q = specialize(q, j, v);
      if (!q.constant_term().is_zero()) return true;
    }
    std::vector<FieldElement> pt(n, FieldElement(0));
    pt[i] = 1;
    out.push_back({pt, 1});
    return true;
  }
  auto rvars = drop_vars(vars, keep);
  std::vector<MultiPoly> sub;
  for (const auto& p : eqs) sub.push_back(restrict_to(p, vals, rvars));
  auto res = solve_affine(sub);
  if (res.positive_dimensional) return false;
  for (auto& ap : res.points) {
    std::vector<FieldElement> pt(n, FieldElement(0));
    pt[i] = 1;
    for (size_t k = 0; k < keep.size(); ++k) pt[keep[k]] = ap.coords[k];
    out.push_back({pt, ap.cluster});
  }
  return true;
}

// f with x_i = 1 in the ring of the other variables, centred at pt.
MultiPoly chart_germ(const MultiPoly& f, int i, const std::vector<FieldElement>& pt) {
  const auto& vars = f.vars_ptr();
  std::vector<int> keep;
  for (int j = 0; j < f.nvars(); ++j)
    if (j != i) keep.push_back(j);
  auto cvars = drop_vars(vars, keep);
  MultiPoly g = restrict_to(f, {{i, FieldElement(1)}}, cvars);
  std::vector<FieldElement> at;
  for (int j : keep) at.push_back(pt[j]);
  return shift(g, at);
}

std::vector<MultiPoly> jacobian_system(const MultiPoly& f) {
  std::vector<MultiPoly> eqs{f};
  for (int j = 0; j < f.nvars(); ++j) eqs.push_back(f.derivative(j));
  return eqs;
}

FieldElement embed(const FieldElement& x, const FieldElement& theta) {
  if (x.coeffs().size() == 1) return FieldElement(x.coeffs()[0]);
  FieldElement r(0), p(1);
  for (const auto& c : x.coeffs()) {
    r += p * FieldElement(c);
    p *= theta;
  }
  return r;
}

}  // namespace

std::vector<SingularityType> SurfaceProfile::types() const {
  std::vector<SingularityType> out;
  if (!is_normal) return {SingularityType::non_normal()};
  for (const auto& p : singular_points)
    for (int k = 0; k < p.cluster_size; ++k) out.push_back(p.type);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> SurfaceProfile::type_strings() const {
  std::vector<std::string> out;
  for (const auto& t : types()) out.push_back(t.to_string());
  return out;
}

std::string to_string(BaseSpace b) {
  switch (b) {
    case BaseSpace::P2: return "P2";
    case BaseSpace::P112: return "P(1,1,2)";
    case BaseSpace::P114: return "P(1,1,4)";
    case BaseSpace::P129: return "P(1,2,9)";
  }
  return "?";
}

BaseSpace parse_base(const std::string& s) {
  for (auto b : {BaseSpace::P2, BaseSpace::P112, BaseSpace::P114, BaseSpace::P129})
    if (to_string(b) == s) return b;
  if (s == "P(1,1,1)") return BaseSpace::P2;
  throw MathError("unsupported double-cover base " + s);
}

std::vector<long> base_weights(BaseSpace b) {
  switch (b) {
    case BaseSpace::P2: return {1, 1, 1};
    case BaseSpace::P112: return {1, 1, 2};
    case BaseSpace::P114: return {1, 1, 4};
    case BaseSpace::P129: return {1, 2, 9};
  }
  return {};
}

long branch_degree(BaseSpace b) {
  switch (b) {
    case BaseSpace::P2: return 4;
    case BaseSpace::P112: return 6;
    case BaseSpace::P114: return 8;
    case BaseSpace::P129: return 18;
  }
  return 0;
}

SurfaceProfile profile_cubic(const MultiPoly& F, const TruncationPolicy& policy) {
  if (F.nvars() != 4) throw MathError("cubic surface needs four variables");
  auto wd = weighted_degree(F, WeightSystem{{1, 1, 1, 1}});
  if (!wd.homogeneous || wd.degrees.front() != 3) throw MathError("cubic surface must be a homogeneous cubic");
  SurfaceProfile prof;
  prof.ambient = "P3";
  prof.degree = 3;
  if (!repeated_part(F).is_constant()) {
    prof.is_normal = false;
    return prof;
  }
  auto eqs = jacobian_system(F);
  for (int i = 0; i < 4; ++i) {
    std::vector<AlgebraicPoint> pts;
    if (!stratum_points(eqs, i, pts)) {
      prof.is_normal = false;
      prof.singular_points.clear();
      return prof;
    }
    for (const auto& ap : pts) {
      auto t = classify_surface_germ(chart_germ(F, i, ap.coords), surface_policy(policy));
      if (t == SingularityType::non_normal()) prof.is_normal = false;
      prof.singular_points.push_back({ap.coords, ap.cluster, t, ""});
    }
  }
  sort_points(prof.singular_points);
  return prof;
}

SurfaceProfile profile_plane_curve(const MultiPoly& F, const TruncationPolicy& policy) {
  if (F.nvars() != 3) throw MathError("plane curve needs three variables");
  SurfaceProfile prof;
  prof.ambient = "P2";
  if (!repeated_part(F).is_constant()) {
    prof.is_normal = false;
    return prof;
  }
  auto eqs = jacobian_system(F);
  for (int i = 0; i < 3; ++i) {
    std::vector<AlgebraicPoint> pts;
    if (!stratum_points(eqs, i, pts)) throw std::logic_error("reduced plane curve with non-isolated singularities");
    for (const auto& ap : pts)
      prof.singular_points.push_back({ap.coords, ap.cluster, classify_curve_germ(chart_germ(F, i, ap.coords), policy), ""});
  }
  sort_points(prof.singular_points);
  return prof;
}

// ---------------------------------------------------------------- pencils

MultiPoly quadric_form(const QMat& m, const VarsPtr& vars) {
  MultiPoly q(vars);
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(m[i][j]) != 0) q += (MultiPoly::var(vars, i) * MultiPoly::var(vars, j)).scaled(FieldElement(m[i][j]));
  return q;
}

QuadricPencil pencil_from_quadrics(const MultiPoly& q1, const MultiPoly& q2) {
  if (q1.nvars() != 5 || q2.nvars() != 5) throw MathError("pencil quadrics need five variables");
  auto matrix = [](const MultiPoly& q) {
    auto wd = weighted_degree(q, WeightSystem{{1, 1, 1, 1, 1}});
    if (!wd.homogeneous || wd.degrees.front() != 2) throw MathError("pencil members must be quadratic forms");
    QMat m(5, QVec(5, Rational(0)));
    for (const auto& [e, c] : q.terms()) {
      if (!c.is_rational()) throw MathError("pencil coefficients must be rational");
      std::vector<int> idx;
      for (int i = 0; i < 5; ++i)
        for (int k = 0; k < e[i]; ++k) idx.push_back(i);
      if (idx[0] == idx[1]) {
        m[idx[0]][idx[0]] = c.rational();
      } else {
        m[idx[0]][idx[1]] = c.rational() / 2;
        m[idx[1]][idx[0]] = c.rational() / 2;
      }
    }
    return m;
  };
  return {matrix(q1), matrix(q2)};
}

MultiPoly pencil_determinant(const QuadricPencil& P) {
  auto vars = make_vars({"s", "t"});
  MultiPoly s = MultiPoly::var(vars, 0), t = MultiPoly::var(vars, 1);
  std::vector<std::vector<MultiPoly>> m(5, std::vector<MultiPoly>(5, MultiPoly(vars)));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = s.scaled(FieldElement(P.A[i][j])) + t.scaled(FieldElement(P.B[i][j]));
  return determinant(m, vars);
}

namespace {

Mat to_mat(const QMat& q) {
  Mat m;
  for (const auto& row : q) m.emplace_back(row.begin(), row.end());
  return m;
}

// Kernel members M(theta) = theta*A + B for each root class, plus A itself for [1:0].
struct PencilRoot {
  Mat M;
  FieldElement theta;  // irrelevant for the root at infinity
  bool at_infinity = false;
  QPoly minpoly;       // of theta (linear when rational)
  int multiplicity = 1;
};

std::vector<PencilRoot> pencil_roots(const QuadricPencil& P) {
  MultiPoly q = pencil_determinant(P);
  if (q.is_zero()) throw MathError("degenerate pencil");
  MultiPoly qs = specialize(q, 1, 1);
  QPoly u = to_qpoly(change_ring(qs, make_vars({"s"})), 0);
  std::vector<PencilRoot> out;
  Mat A = to_mat(P.A), B = to_mat(P.B);
  for (const auto& [m, mult] : factor_q(u)) {
    PencilRoot r;
    r.minpoly = m;
    r.multiplicity = mult;
    r.theta = deg(m) == 1 ? FieldElement(Rational(-m[0])) : FieldElement::generator(make_field_unchecked(m, "t"));
    r.M = mat_add(mat_scale(A, r.theta), B);
    out.push_back(r);
  }
  if (deg(u) < 5) {
    PencilRoot r;
    r.M = A;
    r.at_infinity = true;
    r.minpoly = {Rational(0), Rational(1)};
    r.theta = 0;
    r.multiplicity = 5 - deg(u);
    out.push_back(r);
  }
  return out;
}

FieldElement form(const Mat& m, const Vec& x) {
  FieldElement r(0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!m[i][j].is_zero()) r += x[i] * m[i][j] * x[j];
  return r;
}

FieldElement bilinear(const Mat& m, const Vec& x, const Vec& y) {
  FieldElement r(0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      if (!m[i][j].is_zero()) r += x[i] * m[i][j] * y[j];
  return r;
}

Mat embed_mat(const Mat& m, const FieldElement& theta) {
  Mat r = m;
  for (auto& row : r)
    for (auto& x : row) x = embed(x, theta);
  return r;
}

SingularityType pencil_germ_type(const QuadricPencil& P, const Mat& Mtheta, Vec p, const TruncationPolicy& policy) {
  int j = 0;
  while (p[j].is_zero()) ++j;
  FieldElement inv = p[j].inverse();
  for (auto& x : p) x *= inv;
  Mat A = to_mat(P.A), B = to_mat(P.B);
  Vec ga = matvec(A, p), gb = matvec(B, p);
  auto nonzero = [](const Vec& v) {
    return std::any_of(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
  };
  const Mat* smooth = nonzero(ga) ? &A : nonzero(gb) ? &B : nullptr;
  if (!smooth) return SingularityType::worse();
  auto vars = make_vars({"x0", "x1", "x2", "x3", "x4"});
  auto build = [&](const Mat& m) {
    MultiPoly q(vars);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        if (!m[a][b].is_zero()) q += (MultiPoly::var(vars, a) * MultiPoly::var(vars, b)).scaled(m[a][b]);
    return chart_germ(q, j, p);
  };
  MultiPoly qsm = build(*smooth), qth = build(Mtheta);
  // Solve the smooth member for a variable with nonzero linear coefficient.
  int k = -1;
  for (int i = 0; i < 4 && k < 0; ++i) {
    Exponent e{};
    e[i] = 1;
    if (!qsm.coeff(e).is_zero()) k = i;
  }
  std::vector<int> keep;
  for (int i = 0; i < 4; ++i)
    if (i != k) keep.push_back(i);
  auto svars = drop_vars(qsm.vars_ptr(), keep);
  for (int n = surface_policy(policy).start;; n *= 2) {
    try {
      std::vector<MultiPoly> images;
      for (int i = 0; i < 4; ++i) images.push_back(MultiPoly::var(qsm.vars_ptr(), i));
      images[k] = solve_smooth(qsm, k, n);
      MultiPoly germ = change_ring(substitute(qth, images, n), svars);
      return classify_surface_germ(germ, n, false);
    } catch (const TruncationError&) {
      if (n * 2 > policy.max) throw;
    }
  }
}

}  // namespace

bool simultaneously_diagonalizable(const QuadricPencil& P) {
  Mat A = to_mat(P.A), B = to_mat(P.B);
  Mat M0, M1;
  if (!det(A).is_zero()) {
    M0 = A;
    M1 = B;
  } else {
    int s = 1;
    while (det(mat_add(mat_scale(A, s), B)).is_zero()) ++s;
    M0 = mat_add(mat_scale(A, s), B);
    M1 = A;
  }
  Mat N = matmul(inverse(M0), M1);
  return poly_annihilates(squarefree_part(charpoly(N)), N);
}

SurfaceProfile profile_pencil(const QuadricPencil& P, const TruncationPolicy& policy) {
  SurfaceProfile prof;
  prof.ambient = "P4 pencil";
  prof.degree = 4;
  Mat A = to_mat(P.A);
  for (const auto& root : pencil_roots(P)) {
    auto ker = kernel(root.M);
    const int cluster = deg(root.minpoly);
    if (ker.size() >= 3) {
      prof.is_normal = false;
      prof.singular_points.clear();
      return prof;
    }
    if (ker.size() == 1) {
      // (theta A + B) p = 0 gives theta p.Ap + p.Bp = 0, so p.Ap = 0 puts p on both quadrics
      // unless theta is infinite, where p.Bp must be checked instead.
      const Mat& other = root.at_infinity ? to_mat(P.B) : A;
      if (!form(other, ker[0]).is_zero()) continue;
      auto t = pencil_germ_type(P, root.M, ker[0], policy);
      prof.singular_points.push_back({ker[0], cluster, t, ""});
      continue;
    }
    // Two-dimensional kernel: points u k1 + v k2 on the other quadric.
    const Mat& other = root.at_infinity ? to_mat(P.B) : A;
    FieldElement a = form(other, ker[0]), b = FieldElement(2) * bilinear(other, ker[0], ker[1]),
                 c = form(other, ker[1]);
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
      prof.is_normal = false;
      prof.singular_points.clear();
      return prof;
    }
    auto add_point = [&](const Vec& p, const Mat& M, int cl) {
      prof.singular_points.push_back({p, cl, pencil_germ_type(P, M, p, policy), ""});
    };
    auto combo = [](const Vec& k1, const Vec& k2, const FieldElement& u, const FieldElement& v) {
      Vec p(k1.size());
      for (size_t i = 0; i < p.size(); ++i) p[i] = u * k1[i] + v * k2[i];
      return p;
    };
    if (a.is_zero()) {
      add_point(ker[0], root.M, cluster);
      if (!b.is_zero()) add_point(combo(ker[0], ker[1], -c, b), root.M, cluster);
      continue;
    }
    FieldElement disc = b * b - FieldElement(4) * a * c;
    if (disc.is_zero()) {
      add_point(combo(ker[0], ker[1], -b, FieldElement(2) * a), root.M, cluster);
      continue;
    }
    QPoly dq(disc.coeffs().begin(), disc.coeffs().end());
    trim(dq);
    for (const auto& lift : adjoin_sqrt(root.minpoly, dq)) {
      Vec k1, k2;
      for (const auto& x : ker[0]) k1.push_back(embed(x, lift.theta));
      for (const auto& x : ker[1]) k2.push_back(embed(x, lift.theta));
      FieldElement ae = embed(a, lift.theta), be = embed(b, lift.theta);
      Mat Me = embed_mat(root.M, lift.theta);
      add_point(combo(k1, k2, -be + lift.delta, FieldElement(2) * ae), Me, lift.cluster);
    }
  }
  sort_points(prof.singular_points);
  return prof;
}

// ---------------------------------------------------------------- double covers

namespace {

struct OrbifoldPoint {
  int coordinate;        // which coordinate is 1
  long order;            // r
  long wa, wb;           // weights of the two local coordinates
  int ia, ib;            // their indices
};

// Cover points over an orbifold point of the base; appends to prof.
void cover_over_orbifold(const MultiPoly& f, const OrbifoldPoint& o, long d, BaseSpace base, SurfaceProfile& prof,
                         const TruncationPolicy& policy) {
  std::vector<FieldElement> pt(3, FieldElement(0));
  pt[o.coordinate] = 1;
  MultiPoly germ = chart_germ(f, o.coordinate, pt);
  // chart_germ keeps variable order, so local coordinates are (ia, ib) sorted.
  const long half = d / 2;
  if (!germ.constant_term().is_zero()) {
    long g = std::gcd(o.order, half);
    bool one_point = (o.order / g) % 2 == 0;
    SingularityType t = SingularityType::smooth();
    if (g > 1) t = SingularityType::cyclic(static_cast<int>(g), static_cast<int>((o.wb % g) * mod_inverse(o.wa % g, g) % g));
    if (t != SingularityType::smooth())
      prof.singular_points.push_back({pt, one_point ? 1 : 2, t, "orbifold point off the branch"});
    return;
  }
  if (o.order == 2 && o.wa % 2 == 1 && o.wb % 2 == 1 && half % 2 == 1) {
    auto t = classify_curve_germ(germ, policy);
    if (t == SingularityType::non_normal()) {
      prof.is_normal = false;
      return;
    }
    if (t.tag == SingTag::A && t.k % 2 == 1) {
      const int m = (t.k + 1) / 2;
      prof.singular_points.push_back({pt, 1, SingularityType::cyclic(4 * m, 2 * m - 1), "orbifold point on the branch"});
    } else {
      prof.singular_points.push_back({pt, 1, SingularityType::worse(), "unclassified-quotient"});
    }
    return;
  }
  if (base == BaseSpace::P114 || base == BaseSpace::P129) throw MathError("excluded by classification");
  prof.singular_points.push_back({pt, 1, SingularityType::worse(), "unclassified-quotient"});
}

}  // namespace

SurfaceProfile profile_double_cover(BaseSpace base, const MultiPoly& f, const TruncationPolicy& policy) {
  if (f.nvars() != 3) throw MathError("branch curve needs three variables");
  const auto w = base_weights(base);
  const long d = branch_degree(base);
  auto wd = weighted_degree(f, WeightSystem{w});
  if (!wd.homogeneous || wd.degrees.front() != d)
    throw MathError("branch must be weighted homogeneous of degree " + std::to_string(d) + " on " + to_string(base));
  SurfaceProfile prof;
  prof.ambient = "double cover of " + to_string(base);
  prof.degree = base == BaseSpace::P2 || base == BaseSpace::P114 ? 2 : 1;
  MultiPoly rep = repeated_part(f);
  if (!rep.is_constant()) {
    prof.is_normal = false;
    return prof;
  }
  auto eqs = jacobian_system(f);
  // Chart x0 = 1: an honest affine plane (w0 = 1 for every base).
  {
    std::vector<AlgebraicPoint> pts;
    if (!stratum_points(eqs, 0, pts)) throw std::logic_error("reduced branch with non-isolated singularities");
    for (const auto& ap : pts) {
      auto t = double_cover_type(chart_germ(f, 0, ap.coords), policy);
      prof.singular_points.push_back({ap.coords, ap.cluster, t, ""});
    }
  }
  // Stratum x0 = 0, x1 = 1, x2 = c != 0: smooth base points. For w1 = 2 the values
  // c and -c are the same point.
  {
    std::vector<AlgebraicPoint> pts;
    if (!stratum_points(eqs, 1, pts)) throw std::logic_error("reduced branch with non-isolated singularities");
    std::vector<QPoly> seen;
    for (const auto& ap : pts) {
      const FieldElement& c = ap.coords[2];
      if (c.is_zero()) continue;  // orbifold point, handled below
      int cluster = ap.cluster;
      if (w[1] == 2) {
        // minimal polynomial of c; its pair under c -> -c
        QPoly m;
        if (c.is_rational()) {
          m = {Rational(-c.rational()), Rational(1)};
        } else {
          m = c.field()->minpoly;
        }
        QPoly mneg = m;
        for (size_t k = 1; k < mneg.size(); k += 2) mneg[k] = -mneg[k];
        if (deg(mneg) % 2 == 1)
          for (auto& x : mneg) x = -x;
        if (mneg == m) {
          cluster /= 2;
        } else if (std::find(seen.begin(), seen.end(), mneg) != seen.end()) {
          continue;
        }
        seen.push_back(m);
      }
      // Local coordinates (x0, x2 - c) in the chart x1 = 1.
      MultiPoly germ = chart_germ(f, 1, ap.coords);
      prof.singular_points.push_back({ap.coords, cluster, double_cover_type(germ, policy), ""});
    }
    if (w[1] > 1) {
      cover_over_orbifold(f, OrbifoldPoint{1, w[1], w[0], w[2], 0, 2}, d, base, prof, policy);
    } else {
      // [0:1:0] is a smooth base point; covered by the stratum solve unless c = 0.
      for (const auto& ap : pts)
        if (ap.coords[2].is_zero())
          prof.singular_points.push_back({ap.coords, ap.cluster, double_cover_type(chart_germ(f, 1, ap.coords), policy), ""});
    }
  }
  if (w[2] > 1) {
    cover_over_orbifold(f, OrbifoldPoint{2, w[2], w[0], w[1], 0, 1}, d, base, prof, policy);
  } else {
    std::vector<AlgebraicPoint> pts;
    stratum_points(eqs, 2, pts);
    for (const auto& ap : pts)
      prof.singular_points.push_back({ap.coords, ap.cluster, double_cover_type(chart_germ(f, 2, ap.coords), policy), ""});
  }
  if (!prof.is_normal) prof.singular_points.clear();
  std::erase_if(prof.singular_points, [](const SingularPoint& p) { return p.type == SingularityType::smooth(); });
  sort_points(prof.singular_points);
  return prof;
}

}  // namespace dpgit
