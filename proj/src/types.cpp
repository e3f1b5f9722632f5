#include "dpgit/types.hpp"

#include <numeric>
#include <regex>

#include "dpgit/errors.hpp"

namespace dpgit {

long mod_inverse(long a, long n) {
  long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw MathError("weight not invertible modulo the order");
  return t < 0 ? t + n : t;
}

long canonical_a(long n, long a) {
  a = ((a % n) + n) % n;
  if (n == 1) return 0;
  return std::min(a, mod_inverse(a, n));
}

SingularityType SingularityType::A(int k) {
  if (k < 1) throw MathError("A_k needs k >= 1");
  return {SingTag::A, k, 0};
}

SingularityType SingularityType::D(int k) {
  if (k < 4) throw MathError("D_k needs k >= 4");
  return {SingTag::D, k, 0};
}

SingularityType SingularityType::E(int k) {
  if (k < 6 || k > 8) throw MathError("E_k needs k in {6,7,8}");
  return {SingTag::E, k, 0};
}

SingularityType SingularityType::cyclic(int n, int a) {
  if (n < 1) throw MathError("cyclic quotient order must be positive");
  if (n == 1) return smooth();
  if (std::gcd(n, a) != 1) throw MathError("cyclic quotient weight must be coprime to the order");
  int ca = static_cast<int>(canonical_a(n, a));
  if (ca == n - 1) return A(n - 1);
  return {SingTag::CyclicQuotient, n, ca};
}

std::optional<int> SingularityType::milnor() const {
  if (tag == SingTag::Smooth) return 0;
  if (is_du_val()) return k;
  return std::nullopt;
}

std::string SingularityType::to_string() const {
  switch (tag) {
    case SingTag::Smooth: return "smooth";
    case SingTag::A: return "A" + std::to_string(k);
    case SingTag::D: return "D" + std::to_string(k);
    case SingTag::E: return "E" + std::to_string(k);
    case SingTag::CyclicQuotient: return "1/" + std::to_string(k) + "(1," + std::to_string(a) + ")";
    case SingTag::NonNormal: return "non-normal";
    case SingTag::WorseThanADE: return "worse-than-ADE";
  }
  return "?";
}

SingularityType SingularityType::parse(const std::string& s) {
  static const std::regex ade("([ADE])([0-9]+)"), cyc("1/([0-9]+)\\(1,([0-9]+)\\)");
  std::smatch m;
  if (s == "smooth") return smooth();
  if (s == "non-normal") return non_normal();
  if (s == "worse-than-ADE") return worse();
  if (std::regex_match(s, m, ade)) {
    int k = std::stoi(m[2]);
    if (m[1] == "A") return A(k);
    if (m[1] == "D") return D(k);
    return E(k);
  }
  if (std::regex_match(s, m, cyc)) return cyclic(std::stoi(m[1]), std::stoi(m[2]));
  throw MathError("unknown singularity type '" + s + "'");
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::SemistableNotPolystable: return "SemistableNotPolystable";
    case Stability::PolystableNotStable: return "PolystableNotStable";
    case Stability::Unstable: return "Unstable";
  }
  return "?";
}

Stability parse_stability(const std::string& s) {
  for (auto c : {Stability::Stable, Stability::SemistableNotPolystable, Stability::PolystableNotStable, Stability::Unstable})
    if (to_string(c) == s) return c;
  throw MathError("unknown stability class '" + s + "'");
}

}  // namespace dpgit
