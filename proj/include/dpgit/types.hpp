#pragma once
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dpgit {

enum class SingTag { Smooth, A, D, E, CyclicQuotient, NonNormal, WorseThanADE };

// Output vocabulary of every classifier. Cyclic quotients are kept canonical:
// 1/n(1,a) with a = min(a, a^-1 mod n); 1/n(1,n-1) is stored as A(n-1).
struct SingularityType {
  SingTag tag = SingTag::Smooth;
  int k = 0;  // index for A/D/E, order n for cyclic quotients
  int a = 0;  // weight for cyclic quotients

  static SingularityType smooth() { return {}; }
  static SingularityType A(int k);
  static SingularityType D(int k);
  static SingularityType E(int k);
  static SingularityType cyclic(int n, int a);
  static SingularityType non_normal() { return {SingTag::NonNormal, 0, 0}; }
  static SingularityType worse() { return {SingTag::WorseThanADE, 0, 0}; }
  static SingularityType parse(const std::string& s);  // inverse of to_string

  bool is_du_val() const { return tag == SingTag::A || tag == SingTag::D || tag == SingTag::E; }
  std::optional<int> milnor() const;
  std::string to_string() const;

  auto operator<=>(const SingularityType&) const = default;
};

enum class Stability { Stable, SemistableNotPolystable, PolystableNotStable, Unstable };

std::string to_string(Stability s);
Stability parse_stability(const std::string& s);
inline bool is_polystable(Stability s) { return s == Stability::Stable || s == Stability::PolystableNotStable; }
inline bool is_semistable(Stability s) { return s != Stability::Unstable; }

struct StabilityResult {
  Stability cls = Stability::Stable;
  std::optional<std::vector<long>> certificate;  // destabilizing 1-PS when known
  std::vector<std::string> notes;
  bool boundary = false;  // verdict on a boundary case flagged for review
};

long mod_inverse(long a, long n);  // throws unless gcd(a,n)=1
long canonical_a(long n, long a);

}  // namespace dpgit
