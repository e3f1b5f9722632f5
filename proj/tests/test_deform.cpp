#include "doctest.h"
#include "dpgit/deform.hpp"
#include "dpgit/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dpgit;
using namespace dpgit::test;

namespace {

std::vector<FieldElement> coords(std::initializer_list<long> xs) {
  std::vector<FieldElement> v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

Support support_of(const DefSpace& s, const std::vector<FieldElement>& v) {
  Support out;
  const Support w = s.all_weights();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(w[i]);
  return out;
}

}  // namespace

TEST_SUITE("deform") {

TEST_CASE("Def(X1T) zero patterns") {
  const DefSpace s = DefSpace::X1T();
  CHECK(s.dimension() == 3);
  CHECK(s.torus_rank == 2);
  for (int mask = 0; mask < 8; ++mask) {
    const auto v = coords({mask & 1 ? 2 : 0, mask & 2 ? -5 : 0, mask & 4 ? 7 : 0});
    CAPTURE(mask);
    const DefVerdict d = def_polystability(s, v);
    if (mask == 7) {
      CHECK(d.result.cls == Stability::Stable);
    } else if (mask == 0) {
      CHECK(d.result.cls == Stability::PolystableNotStable);
    } else {
      CHECK(d.result.cls == Stability::Unstable);
      CHECK(oracle::destabilizing_1ps_in_box(support_of(s, v), 6));
      REQUIRE(d.result.certificate.has_value());
      CHECK(verify_certificate(support_of(s, v), *d.result.certificate));
      CHECK(destabilizing_1ps(s, v) == d.result.certificate);
    }
    if (mask == 7 || mask == 0) CHECK_FALSE(destabilizing_1ps(s, v).has_value());
  }
}

TEST_CASE("Def(X1T) quoted one-parameter subgroups") {
  const DefSpace s = DefSpace::X1T();
  CHECK(destabilizing_1ps(s, coords({0, 1, 1})) == IntVec{-1, 0});
  CHECK(destabilizing_1ps(s, coords({1, 0, 1})) == IntVec{0, -1});
  CHECK(destabilizing_1ps(s, coords({1, 1, 0})) == IntVec{3, 2});
  CHECK(def_polystability(s, coords({0, 1, 1})).tabulated);
  CHECK(def_polystability(s, coords({1, 1, 0})).tabulated);
  CHECK_FALSE(def_polystability(s, coords({1, 0, 0})).tabulated);
}

TEST_CASE("Def(X1e)") {
  const DefSpace s = DefSpace::X1e();
  CHECK(s.dimension() == 9);
  CHECK(s.coordinate_names().front() == "a1");
  CHECK(s.coordinate_names().back() == "b6");
  Rng rng(53);
  for (int it = 0; it < 200; ++it) {
    std::vector<FieldElement> v;
    bool a = false, b = false;
    for (size_t i = 0; i < 9; ++i) {
      const bool on = uniform(rng, 0, 3) == 0;
      v.emplace_back(on ? small_rational(rng) + 10 : Rational(0));
      (i < 2 ? a : b) |= on;
    }
    const DefVerdict d = def_polystability(s, v);
    CAPTURE(it);
    if (a && b)
      CHECK(d.result.cls == Stability::Stable);
    else if (!a && !b)
      CHECK(d.result.cls == Stability::PolystableNotStable);
    else {
      CHECK(d.result.cls == Stability::Unstable);
      REQUIRE(d.result.certificate.has_value());
      CHECK(verify_certificate(support_of(s, v), *d.result.certificate));
    }
  }
}

TEST_CASE("dimension and name errors") {
  CHECK_THROWS_AS(def_polystability(DefSpace::X1T(), coords({1, 1})), MathError);
  CHECK_THROWS_AS(destabilizing_1ps(DefSpace::X1e(), coords({1, 1, 1})), MathError);
  CHECK_THROWS_AS(DefSpace::by_name("X9"), MathError);
  CHECK(DefSpace::by_name("X1e").name == "X1e");
}

}  // TEST_SUITE
