#pragma once
#include <optional>
#include <vector>

#include "dpgit/singular.hpp"
#include "dpgit/torus.hpp"

namespace dpgit {

// Diagonal maximal torus of SL_{n+1} acting on the monomials of forms in n+1
// variables. The certificate lists n+1 exponents summing to zero.
std::optional<IntVec> monomial_certificate(const std::vector<MultiPoly>& forms);
StabilityResult monomial_torus_stability(const std::vector<MultiPoly>& forms);

// Root multiplicities of a nonzero binary form of degree d (over the algebraic closure).
std::vector<int> binary_root_multiplicities(const MultiPoly& f, int d);

StabilityResult binary_form_stability(const MultiPoly& f, int d);
StabilityResult cubic_stability(const MultiPoly& F, const SurfaceProfile& profile);
StabilityResult cubic_stability(const MultiPoly& F);
StabilityResult quartic_dp_stability(const QuadricPencil& P, const SurfaceProfile& profile);
StabilityResult quartic_dp_stability(const QuadricPencil& P);
StabilityResult plane_quartic_stability(const MultiPoly& F);
StabilityResult sextic_dp1_stability(const MultiPoly& f4, const MultiPoly& f6);

// (a, b, c0..c6) for g4 = a u^4 + b v^4, g6 = sum c_k u^(6-k) v^k, u = x + i y, v = x - i y.
std::vector<FieldElement> exceptional_coordinates(const MultiPoly& g4, const MultiPoly& g6);
const Support& exceptional_weights();
StabilityResult exceptional_E_stability(const MultiPoly& g4, const MultiPoly& g6);

FieldPtr gaussian_field();  // Q(i)

}  // namespace dpgit
