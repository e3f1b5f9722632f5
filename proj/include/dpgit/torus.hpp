#pragma once
#include <optional>
#include <vector>

#include "dpgit/field.hpp"
#include "dpgit/types.hpp"

namespace dpgit {

using IntVec = std::vector<long>;
using Support = std::vector<IntVec>;

// Coordinates of a point in a torus representation, one weight vector in Z^r each.
struct TorusPoint {
  std::vector<FieldElement> coords;
  Support weights;
};

StabilityResult torus_stability(const TorusPoint& p);
// Same decision on the weights of the nonzero coordinates directly.
StabilityResult torus_stability_support(const Support& s);

// <lam, s> >= 1 for every s.
bool verify_certificate(const Support& s, const IntVec& lam);

// First lam in lex order among vectors of max-norm exactly b that destabilizes s.
std::optional<IntVec> certificate_at_norm(const Support& s, long b);
std::optional<IntVec> certificate_at_norm_serial(const Support& s, long b);

// Brute force over all lam in [-bound, bound]^r (reference for the LP engine).
bool has_certificate_in_box(const Support& s, long bound);

}  // namespace dpgit
