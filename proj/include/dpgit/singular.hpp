#pragma once
#include <string>
#include <vector>

#include "dpgit/germ.hpp"
#include "dpgit/lp.hpp"
#include "dpgit/poly.hpp"
#include "dpgit/types.hpp"

namespace dpgit {

struct SingularPoint {
  std::vector<FieldElement> point;  // ambient coordinates, one Galois representative
  int cluster_size = 1;
  SingularityType type;
  std::string note;  // e.g. "orbifold point", "unclassified-quotient"
};

struct SurfaceProfile {
  std::string ambient;
  std::vector<SingularPoint> singular_points;
  bool is_normal = true;
  int degree = 0;
  // Types with cluster multiplicity expanded, sorted; ["non-normal"] when not normal.
  std::vector<SingularityType> types() const;
  std::vector<std::string> type_strings() const;
};

struct QuadricPencil {
  QMat A, B;  // symmetric 5x5
};

enum class BaseSpace { P2, P112, P114, P129 };
std::string to_string(BaseSpace b);
BaseSpace parse_base(const std::string& s);  // "P2", "P(1,1,2)", ...
std::vector<long> base_weights(BaseSpace b);
long branch_degree(BaseSpace b);

// Singular points of the affine hypersurface f = 0 (all partials and f vanish).
// The stratification helpers below reuse it chart by chart.
SurfaceProfile profile_cubic(const MultiPoly& F, const TruncationPolicy& policy = TruncationPolicy::from_env());
SurfaceProfile profile_pencil(const QuadricPencil& P, const TruncationPolicy& policy = TruncationPolicy::from_env());
SurfaceProfile profile_double_cover(BaseSpace base, const MultiPoly& branch,
                                    const TruncationPolicy& policy = TruncationPolicy::from_env());
// Singular points of a reduced plane curve in P^2 with their curve-germ types.
SurfaceProfile profile_plane_curve(const MultiPoly& F, const TruncationPolicy& policy = TruncationPolicy::from_env());

// Pencil helpers.
QuadricPencil pencil_from_quadrics(const MultiPoly& q1, const MultiPoly& q2);
MultiPoly quadric_form(const QMat& m, const VarsPtr& vars);
// det(s A + t B) in variables (s, t).
MultiPoly pencil_determinant(const QuadricPencil& P);
// Simultaneously diagonalizable by congruence (requires a nondegenerate member).
bool simultaneously_diagonalizable(const QuadricPencil& P);

}  // namespace dpgit
