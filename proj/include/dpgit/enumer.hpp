#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpgit/types.hpp"

namespace dpgit {

// 1/(d n^2)(1, d n a - 1), gcd(a,n)=1. n=1 is the Du Val A_{d-1} case.
struct TSingularity {
  long d = 1, n = 1, a = 1;
  long index() const { return d * n * n; }
  long weight() const { return d * n * a - 1; }
};

// Matches 1/n(1,a) or 1/n(1,a^-1) against the T family.
std::optional<TSingularity> is_t_singularity(long n, long a);

struct HJString {
  long n = 0, a = 0;               // a canonical
  std::vector<long> expansion;     // b_i >= 2
  std::vector<long> string;        // -b_i
  std::vector<long> reversed;
};
HJString hj_expansion(long n, long a);

using Triple = std::array<long, 3>;
// Positive solutions of a^2 + b^2 + 2c^2 = 4abc with max <= bound, sorted.
std::vector<Triple> markov_solutions(long bound);

long orbifold_order(const SingularityType& t);
bool order_bound_filter(int d, const SingularityType& t);
// T-singularities surviving the order bound, sorted A, D, E, then cyclic.
// With noether_filter, ADE entries need mu <= 9 - d.
std::vector<SingularityType> gh_menu(int d, bool noether_filter = false);

bool noether_check(int d, int picard_rank, const std::vector<int>& milnor);
bool noether_check(int d, int picard_rank, const std::vector<SingularityType>& profile);

struct BergmanExponents {
  int step = 1;  // admissible k are the positive multiples of step
  std::string description;
  bool contains(long k) const { return k >= 1 && k % step == 0; }
};
BergmanExponents bergman_exponents(int d);

// All canonical (n,a), 2 <= n <= nmax, that are non Du Val T-singularities.
std::vector<std::pair<long, long>> t_singularity_sweep(long nmax);
std::vector<std::pair<long, long>> t_singularity_sweep_serial(long nmax);

}  // namespace dpgit
