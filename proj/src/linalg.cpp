#include "dpgit/linalg.hpp"

namespace dpgit {

Mat identity_matrix(int n) {
  Mat m(n, Vec(n, FieldElement(0)));
  for (int i = 0; i < n; ++i) m[i][i] = FieldElement(1);
  return m;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b.empty() ? 0 : b[0].size(), FieldElement(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec matvec(const Mat& a, const Vec& v) {
  Vec r(a.size(), FieldElement(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat c(a);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Mat mat_scale(const Mat& a, const FieldElement& s) {
  Mat c(a);
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    FieldElement inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      FieldElement f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(rref(a).size()); }

FieldElement det(Mat a) {
  const size_t n = a.size();
  FieldElement d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return FieldElement(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    FieldElement inv = a[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      FieldElement f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

std::vector<Vec> kernel(Mat a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, FieldElement(0));
    v[f] = FieldElement(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(Mat a) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, FieldElement(0));
    a[i][n + i] = FieldElement(1);
  }
  auto piv = rref(a);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw MathError("matrix is singular");
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

KPoly charpoly(const Mat& a) {
  // Faddeev-LeVerrier: exact in characteristic zero.
  const int n = static_cast<int>(a.size());
  KPoly c(n + 1, FieldElement(0));
  c[n] = FieldElement(1);
  Mat m = identity_matrix(n);
  Mat am;
  for (int k = 1; k <= n; ++k) {
    am = matmul(a, m);
    FieldElement tr(0);
    for (int i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / FieldElement(static_cast<long>(k));
    m = am;
    for (int i = 0; i < n; ++i) m[i][i] += c[n - k];
  }
  return c;
}

bool poly_annihilates(const KPoly& p, const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat acc(n, Vec(n, FieldElement(0)));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = matmul(acc, a);
    for (int i = 0; i < n; ++i) acc[i][i] += *it;
  }
  for (const auto& row : acc)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace dpgit
