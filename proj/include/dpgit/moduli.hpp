#pragma once
#include <array>
#include <string>
#include <utility>

#include "dpgit/poly.hpp"
#include "dpgit/singular.hpp"

namespace dpgit {

// (f, g)_k with the classical normalization (m-k)!(n-k)!/(m! n!).
MultiPoly transvectant(const MultiPoly& f, const MultiPoly& g, int k);

// Point of P(1,2,3) in canonical form: positive rational rescaling
// z_i -> t^i z_i brings the first nonzero coordinate to +-1, or failing that to
// +- a squarefree (weight 2) or cube-free (weight 3) integer.
struct ModuliPoint123 {
  std::array<Rational, 3> z;
  static ModuliPoint123 canonical(std::array<Rational, 3> raw);
  bool operator==(const ModuliPoint123& o) const { return z == o.z; }
  std::string to_string() const;
};

struct QuinticInvariants {
  Rational I4, I8, I12;
  ModuliPoint123 point;
};

MultiPoly pencil_to_quintic(const QuadricPencil& P);
QuinticInvariants quintic_invariants(const MultiPoly& q);

// Divisor z1^2 = c z2 in our normalization; c is pinned in data/invariant_constants.txt.
Rational quintic_divisor_constant();
bool divisor_check_deg4(const ModuliPoint123& m);
bool divisor_check_deg3(const std::array<Rational, 5>& z);

struct BlowupResult {
  MultiPoly f4, f6;
};
// Checks the defining identity and throws std::logic_error if it fails.
BlowupResult blowup_substitution(const MultiPoly& g4, const MultiPoly& g6, const Rational& t);
// t -> 0 limit of [f4 t^-2 : f6 t^-3].
BlowupResult blowup_limit(const MultiPoly& g4, const MultiPoly& g6);

}  // namespace dpgit
