#pragma once
#include <optional>
#include <vector>

#include "dpgit/linalg.hpp"
#include "dpgit/poly.hpp"
#include "dpgit/types.hpp"

namespace dpgit {

// Working precision for power-series steps. DPGIT_TRUNCATION overrides the start.
struct TruncationPolicy {
  int start = 24;
  int max = 192;
  static TruncationPolicy from_env();
};

// Germ at the origin of a two-variable polynomial. exact=false marks a series
// only known up to total degree `truncation`.
struct CurveGerm {
  MultiPoly f;
  int truncation = 24;
  bool exact = true;
};

// One attempt at the germ's working order; throws TruncationError when undecided.
SingularityType classify_curve_germ(const CurveGerm& g);
// Retries with doubled order per the policy.
SingularityType classify_curve_germ(const MultiPoly& f, const TruncationPolicy& policy = TruncationPolicy::from_env());

// Du Val type of w^2 = f over the origin.
SingularityType double_cover_type(const CurveGerm& g);
SingularityType double_cover_type(const MultiPoly& f, const TruncationPolicy& policy = TruncationPolicy::from_env());

// Necessary condition for w^2=f (or its Z/2 quotient) to be a quotient singularity.
bool quotient_singularity_test(const MultiPoly& f);

// Intersection multiplicity at the origin of two plane curves; nullopt when they share a component there.
std::optional<long> intersection_multiplicity(const MultiPoly& f, const MultiPoly& g);
std::optional<long> milnor_number(const MultiPoly& f);

// Isolated hypersurface singularity in three variables at the origin (f(0)=0).
SingularityType classify_surface_germ(const MultiPoly& f, int truncation, bool exact = true);
SingularityType classify_surface_germ(const MultiPoly& f, const TruncationPolicy& policy = TruncationPolicy::from_env());

// p(M v): variable i is replaced by sum_j M[i][j] v_j.
MultiPoly linear_change(const MultiPoly& p, const Mat& m);

// Solve d g / d u_i = 0 (i in solve) for the u_i as power series in the remaining
// variables, up to total degree n. jinv inverts the Hessian block at the origin.
std::vector<MultiPoly> solve_critical(const MultiPoly& g, const std::vector<int>& solve, const Mat& jinv, int n);

// Solve g = 0 for variable k (linear coefficient nonzero) as a series in the others.
MultiPoly solve_smooth(const MultiPoly& g, int k, int n);

}  // namespace dpgit
