#pragma once
#include <vector>

#include "dpgit/poly.hpp"

namespace dpgit {

// One representative of a Galois orbit of solutions; all coordinates lie in
// one field whose degree is the orbit size.
struct AlgebraicPoint {
  std::vector<FieldElement> coords;
  int cluster = 1;
};

struct SolveResult {
  std::vector<AlgebraicPoint> points;
  bool positive_dimensional = false;
};

// Common zeros in affine space of polynomials with rational coefficients.
SolveResult solve_affine(const std::vector<MultiPoly>& eqs);

// Roots of a univariate rational polynomial, one per irreducible factor.
std::vector<AlgebraicPoint> roots_q(const QPoly& p);

// Field generated over Q by theta (root of m) and sqrt(d(theta)), with images of
// theta and sqrt(d(theta)). One entry per orbit of pairs (theta, delta).
struct QuadraticLift {
  FieldElement theta;
  FieldElement delta;
  int cluster = 1;
};
std::vector<QuadraticLift> adjoin_sqrt(const QPoly& m, const QPoly& d);

}  // namespace dpgit
