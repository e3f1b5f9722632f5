#pragma once
#include <optional>
#include <vector>

#include "dpgit/field.hpp"

namespace dpgit {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  QVec x;
  Rational value;
};

// maximize c.x subject to A x = b, x >= 0. Two-phase tableau simplex, Bland's rule.
LPResult simplex_max(const QMat& A, const QVec& b, const QVec& c);

int rank_q(QMat a);

}  // namespace dpgit
