#include "dpgit/enumer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dpgit/errors.hpp"

namespace dpgit {

namespace {

void check_cyclic(long n, long a) {
  if (n < 2 || a < 1 || a >= n || std::gcd(n, a) != 1)
    throw MathError("invalid cyclic quotient 1/" + std::to_string(n) + "(1," + std::to_string(a) + ")");
}

std::optional<TSingularity> match_exact(long n, long a) {
  for (long n0 = 1; n0 * n0 <= n; ++n0) {
    if (n % (n0 * n0) != 0) continue;
    long d = n / (n0 * n0);
    for (long a0 = 1; a0 <= std::max(1L, n0); ++a0) {
      if (std::gcd(a0, n0) != 1) continue;
      if (n0 > 1 && a0 >= n0) break;
      if (((d * n0 * a0 - 1) % n + n) % n == a) return TSingularity{d, n0, a0};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TSingularity> is_t_singularity(long n, long a) {
  check_cyclic(n, a);
  if (auto t = match_exact(n, a)) return t;
  return match_exact(n, mod_inverse(a, n));
}

HJString hj_expansion(long n, long a) {
  check_cyclic(n, a);
  HJString h;
  h.n = n;
  h.a = canonical_a(n, a);
  long num = n, den = h.a;  // current value num/den > 1
  while (den > 0) {
    long b = (num + den - 1) / den;
    h.expansion.push_back(b);
    long r = b * den - num;  // b - num/den = r/den
    num = den;
    den = r;
  }
  for (long b : h.expansion) h.string.push_back(-b);
  h.reversed.assign(h.string.rbegin(), h.string.rend());
  return h;
}

std::vector<Triple> markov_solutions(long bound) {
  std::set<Triple> seen;
  if (bound < 1) return {};
  std::vector<Triple> stack{{1, 1, 1}};
  seen.insert({1, 1, 1});
  while (!stack.empty()) {
    auto [a, b, c] = stack.back();
    stack.pop_back();
    for (Triple t : {Triple{4 * b * c - a, b, c}, Triple{a, 4 * a * c - b, c}, Triple{a, b, 2 * a * b - c}}) {
      if (t[0] < 1 || t[1] < 1 || t[2] < 1) continue;
      if (std::max({t[0], t[1], t[2]}) > bound) continue;
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

long orbifold_order(const SingularityType& t) {
  switch (t.tag) {
    case SingTag::Smooth: return 1;
    case SingTag::A: return t.k + 1;
    case SingTag::D: return 4L * (t.k - 2);
    case SingTag::E: return t.k == 6 ? 24 : t.k == 7 ? 48 : 120;
    case SingTag::CyclicQuotient: return t.k;
    default: throw MathError("orbifold order undefined for " + t.to_string());
  }
}

bool order_bound_filter(int d, const SingularityType& t) {
  if (d < 1 || d > 4) throw MathError("degree must be in 1..4");
  return orbifold_order(t) * d < 12;
}

std::vector<SingularityType> gh_menu(int d, bool noether_filter) {
  if (d < 1 || d > 4) throw MathError("degree must be in 1..4");
  std::vector<SingularityType> out;
  auto keep = [&](const SingularityType& t) {
    if (!order_bound_filter(d, t)) return false;
    if (noether_filter && t.milnor() && *t.milnor() > 9 - d) return false;
    return true;
  };
  // Each series has strictly increasing order, so stop at the first failure.
  for (int k = 1; order_bound_filter(d, SingularityType::A(k)); ++k)
    if (keep(SingularityType::A(k))) out.push_back(SingularityType::A(k));
  for (int k = 4; order_bound_filter(d, SingularityType::D(k)); ++k)
    if (keep(SingularityType::D(k))) out.push_back(SingularityType::D(k));
  for (int k = 6; k <= 8; ++k)
    if (keep(SingularityType::E(k))) out.push_back(SingularityType::E(k));
  for (long n = 2; n * d < 12; ++n)
    for (long a = 1; a < n - 1; ++a) {
      if (std::gcd(n, a) != 1 || canonical_a(n, a) != a) continue;
      if (!is_t_singularity(n, a)) continue;
      auto t = SingularityType::cyclic(static_cast<int>(n), static_cast<int>(a));
      if (keep(t)) out.push_back(t);
    }
  return out;
}

bool noether_check(int d, int picard_rank, const std::vector<int>& milnor) {
  return picard_rank + d + std::accumulate(milnor.begin(), milnor.end(), 0) == 10;
}

bool noether_check(int d, int picard_rank, const std::vector<SingularityType>& profile) {
  std::vector<int> mu;
  for (const auto& t : profile) {
    auto m = t.milnor();
    if (!m) throw MathError("Milnor number undefined in this checker");
    mu.push_back(*m);
  }
  return noether_check(d, picard_rank, mu);
}

BergmanExponents bergman_exponents(int d) {
  if (d < 1 || d > 4) throw MathError("degree must be in 1..4");
  if (d >= 3) return {1, "k>=1"};
  if (d == 2) return {2, "k=2l, l>=1"};
  return {6, "k=6l, l>=1"};
}

std::vector<std::pair<long, long>> t_singularity_sweep_serial(long nmax) {
  std::vector<std::pair<long, long>> out;
  for (long n = 2; n <= nmax; ++n)
    for (long a = 1; a < n - 1; ++a)
      if (std::gcd(n, a) == 1 && canonical_a(n, a) == a && is_t_singularity(n, a)) out.emplace_back(n, a);
  return out;
}

std::vector<std::pair<long, long>> t_singularity_sweep(long nmax) {
  std::vector<std::vector<std::pair<long, long>>> rows(std::max(0L, nmax + 1));
#pragma omp parallel for schedule(dynamic)
  for (long n = 2; n <= nmax; ++n)
    for (long a = 1; a < n - 1; ++a)
      if (std::gcd(n, a) == 1 && canonical_a(n, a) == a && is_t_singularity(n, a)) rows[n].emplace_back(n, a);
  std::vector<std::pair<long, long>> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace dpgit
