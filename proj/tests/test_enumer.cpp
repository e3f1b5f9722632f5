#include <numeric>
#include <set>

#include "doctest.h"
#include "dpgit/enumer.hpp"
#include "dpgit/errors.hpp"
#include "oracles.hpp"

using namespace dpgit;

namespace {

using T = SingularityType;

std::vector<std::string> names(const std::vector<T>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.to_string());
  return out;
}

}  // namespace

TEST_SUITE("enumer") {

TEST_CASE("T-singularity examples") {
  auto t = is_t_singularity(4, 1);
  REQUIRE(t.has_value());
  CHECK(t->d == 1);
  CHECK(t->n == 2);
  CHECK(t->a == 1);
  t = is_t_singularity(9, 2);
  REQUIRE(t.has_value());
  CHECK(t->d == 1);
  CHECK(t->n == 3);
  CHECK(t->a == 1);
  CHECK_FALSE(is_t_singularity(7, 1).has_value());
  t = is_t_singularity(8, 3);
  REQUIRE(t.has_value());
  CHECK(t->d == 2);
  CHECK(t->n == 2);
  t = is_t_singularity(6, 5);  // Du Val A5
  REQUIRE(t.has_value());
  CHECK(t->n == 1);
  CHECK_THROWS_AS(is_t_singularity(6, 2), MathError);
  CHECK_THROWS_AS(is_t_singularity(1, 0), MathError);
}

TEST_CASE("T-singularities match the exhaustive oracle") {
  for (long n = 2; n <= 80; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto t = is_t_singularity(n, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(t.has_value() == oracle::is_t(n, a));
      if (t) {
        CHECK(t->index() == n);
        const long q = ((t->weight() % n) + n) % n;
        CHECK((q == a || q == mod_inverse(a, n)));
      }
    }
}

TEST_CASE("Hirzebruch-Jung strings") {
  auto h = hj_expansion(9, 2);
  CHECK(h.expansion == std::vector<long>{5, 2});
  CHECK(h.string == std::vector<long>{-5, -2});
  CHECK(h.reversed == std::vector<long>{-2, -5});
  CHECK(hj_expansion(2, 1).expansion == std::vector<long>{2});
  CHECK(hj_expansion(4, 1).expansion == std::vector<long>{4});
  CHECK(hj_expansion(9, 5).expansion == std::vector<long>{5, 2});  // same point as 1/9(1,2)
  CHECK(hj_expansion(5, 4).expansion == std::vector<long>{2, 2, 2, 2});
  CHECK_THROWS_AS(hj_expansion(9, 3), MathError);
}

TEST_CASE("continued fractions reconstruct n/a") {
  for (long n = 2; n <= 60; ++n)
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto h = hj_expansion(n, a);
      CHECK(oracle::hj_value(h.expansion) == Rational(n, canonical_a(n, a)));
      for (long b : h.expansion) CHECK(b >= 2);
    }
}

TEST_CASE("Markov-type triples") {
  CHECK(markov_solutions(1) == std::vector<Triple>{{1, 1, 1}});
  CHECK(markov_solutions(0).empty());
  CHECK(markov_solutions(100) == oracle::markov_brute(100));
  const auto sols = markov_solutions(200);
  const std::set<Triple> all(sols.begin(), sols.end());
  for (const auto& [a, b, c] : sols) {
    for (const Triple m : {Triple{4 * b * c - a, b, c}, Triple{a, 4 * a * c - b, c}, Triple{a, b, 2 * a * b - c}}) {
      if (m[0] < 1 || m[1] < 1 || m[2] < 1 || std::max({m[0], m[1], m[2]}) > 200) continue;
      CHECK(all.count(m) == 1);
    }
  }
}

TEST_CASE("orbifold order bound") {
  CHECK(order_bound_filter(2, T::A(4)));
  CHECK_FALSE(order_bound_filter(2, T::A(5)));
  CHECK(order_bound_filter(1, T::D(4)));
  CHECK_FALSE(order_bound_filter(1, T::D(5)));
  CHECK(order_bound_filter(1, T::A(10)));
  CHECK_FALSE(order_bound_filter(1, T::A(11)));
  CHECK(orbifold_order(T::E(6)) == 24);
  CHECK(orbifold_order(T::E(7)) == 48);
  CHECK(orbifold_order(T::E(8)) == 120);
  CHECK(orbifold_order(T::D(6)) == 16);
  CHECK(orbifold_order(T::cyclic(9, 2)) == 9);
  CHECK_THROWS_AS(order_bound_filter(1, T::non_normal()), MathError);
  CHECK_THROWS_AS(order_bound_filter(5, T::A(1)), MathError);
}

TEST_CASE("menus") {
  CHECK(names(gh_menu(4)) == std::vector<std::string>{"A1"});
  CHECK(names(gh_menu(3)) == std::vector<std::string>{"A1", "A2"});
  CHECK(names(gh_menu(2)) == std::vector<std::string>{"A1", "A2", "A3", "A4", "1/4(1,1)"});
  CHECK(names(gh_menu(1)) == std::vector<std::string>{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "D4",
                                                      "1/4(1,1)", "1/8(1,3)", "1/9(1,2)"});
  for (int d = 1; d <= 4; ++d) CHECK(names(gh_menu(d)) == names(oracle::menu(d)));
  // Noether as a second filter drops the ADE entries with mu > 9 - d.
  CHECK(names(gh_menu(1, true)) == std::vector<std::string>{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4",
                                                            "1/4(1,1)", "1/8(1,3)", "1/9(1,2)"});
}

TEST_CASE("Noether formula") {
  CHECK(noether_check(1, 1, std::vector<int>{8}));
  CHECK(noether_check(3, 1, std::vector<int>{2, 2, 2}));
  CHECK(noether_check(4, 2, std::vector<int>{1, 1, 1, 1}));
  CHECK_FALSE(noether_check(2, 1, std::vector<int>{3, 3}));
  CHECK(noether_check(3, 1, std::vector<T>{T::A(2), T::A(2), T::A(2)}));
  CHECK_THROWS_AS(noether_check(2, 1, std::vector<T>{T::A(3), T::cyclic(4, 1)}), MathError);
}

TEST_CASE("Bergman exponents") {
  CHECK(bergman_exponents(4).step == 1);
  CHECK(bergman_exponents(3).step == 1);
  CHECK(bergman_exponents(2).step == 2);
  CHECK(bergman_exponents(1).step == 6);
  CHECK(bergman_exponents(1).contains(12));
  CHECK_FALSE(bergman_exponents(1).contains(8));
  CHECK_FALSE(bergman_exponents(3).contains(0));
}

TEST_CASE("singularity type strings round-trip") {
  for (const auto& t : {T::smooth(), T::A(3), T::D(5), T::E(7), T::cyclic(9, 2), T::cyclic(8, 3), T::non_normal(), T::worse()})
    CHECK(T::parse(t.to_string()) == t);
  CHECK(T::cyclic(9, 5) == T::cyclic(9, 2));
  CHECK(T::cyclic(5, 4) == T::A(4));
}

}  // TEST_SUITE
