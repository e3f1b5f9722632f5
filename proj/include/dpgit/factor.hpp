#pragma once
#include <utility>
#include <vector>

#include "dpgit/upoly.hpp"

namespace dpgit {

// Monic irreducible factors over Q with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<QPoly, int>> factor_q(const QPoly& f);

bool is_irreducible_q(const QPoly& f);

// Serial building blocks, exposed for tests.
namespace detail {
using ZPoly = std::vector<Integer>;
std::vector<std::vector<long>> factor_mod_p(const std::vector<long>& f, long p);
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);
}  // namespace detail

}  // namespace dpgit
