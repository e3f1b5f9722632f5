#include "dpgit/lp.hpp"

#include "dpgit/errors.hpp"

namespace dpgit {

namespace {

// Tableau rows 0..m-1 are constraints, last column the rhs; basis[i] is the basic column of row i.
struct Tableau {
  QMat t;
  std::vector<int> basis;
  int ncols = 0;  // structural columns (excluding rhs)

  void pivot(int r, int c) {
    Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(t[i][c]) == 0) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximize objective row obj (reduced costs kept in row obj as -c). Columns >= limit are barred.
  bool optimize(int obj, int limit) {
    const int m = static_cast<int>(basis.size());
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (sgn(t[obj][j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult simplex_max(const QMat& A, const QVec& b, const QVec& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw MathError("LP dimension mismatch");
  Tableau T;
  T.ncols = n + m;  // structural plus artificials
  T.t.assign(m + 2, QVec(T.ncols + 1));
  T.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool neg = sgn(b[i]) < 0;
    for (int j = 0; j < n; ++j) T.t[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
    T.t[i][n + i] = 1;
    T.t[i][T.ncols] = neg ? Rational(-b[i]) : b[i];
    T.basis[i] = n + i;
  }
  const int obj = m, aux = m + 1;
  for (int j = 0; j < n; ++j) T.t[obj][j] = -c[j];
  // Phase 1: maximize -sum(artificials).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= T.ncols; ++j)
      if (j < n || j == T.ncols) T.t[aux][j] -= T.t[i][j];
  T.optimize(aux, T.ncols);
  LPResult res;
  if (sgn(T.t[aux][T.ncols]) != 0) return res;
  // Drive remaining artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (T.basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (sgn(T.t[i][j]) != 0) {
        T.pivot(i, j);
        break;
      }
  }
  if (!T.optimize(obj, n)) {
    res.status = LPResult::Status::Unbounded;
    return res;
  }
  res.status = LPResult::Status::Optimal;
  res.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < n) res.x[T.basis[i]] = T.t[i][T.ncols];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

int rank_q(QMat a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace dpgit
