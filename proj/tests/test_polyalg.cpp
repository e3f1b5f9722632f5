#include <random>

#include "doctest.h"
#include "dpgit/errors.hpp"
#include "dpgit/factor.hpp"
#include "dpgit/field.hpp"
#include "dpgit/poly.hpp"
#include "support.hpp"

using namespace dpgit;
using namespace dpgit::test;

TEST_SUITE("polyalg") {

TEST_CASE("weighted degree") {
  const auto sextic = poly_in("ring P(1,1,2,3) vars x,y,z,w", "w^2 - z^3 - x^6 - y^6");
  auto d = weighted_degree(sextic, WeightSystem{{1, 1, 2, 3}});
  CHECK(d.homogeneous);
  CHECK(d.degrees == std::vector<long>{6});

  const auto toric = poly_in("ring P(1,2,9,9) vars x1,x2,x3,x4", "x3*x4 - x2^9");
  d = weighted_degree(toric, WeightSystem{{1, 2, 9, 9}});
  CHECK(d.homogeneous);
  CHECK(d.degrees == std::vector<long>{18});

  d = weighted_degree(poly("x,y", "x + y^2"), WeightSystem{{1, 1}});
  CHECK_FALSE(d.homogeneous);
  CHECK(d.degrees == std::vector<long>{1, 2});

  CHECK_THROWS_AS(weighted_degree(MultiPoly(make_vars({"x"})), WeightSystem{{1}}), MathError);
}

TEST_CASE("weighted degree is additive on products") {
  Rng rng(11);
  const auto vars = make_vars({"x", "y", "z"});
  for (int it = 0; it < 20; ++it) {
    const int a = static_cast<int>(uniform(rng, 1, 4)), b = static_cast<int>(uniform(rng, 1, 4));
    MultiPoly f = random_form(rng, vars, a, 0.6), g = random_form(rng, vars, b, 0.6);
    if (f.is_zero() || g.is_zero()) continue;
    const WeightSystem w{{1, 1, 1}};
    CHECK(weighted_degree(f * g, w).degrees.front() ==
          weighted_degree(f, w).degrees.front() + weighted_degree(g, w).degrees.front());
  }
}

TEST_CASE("gcd examples") {
  CHECK(gcd_multi(poly("x,y", "x^2*y"), poly("x,y", "x*y^2")) == poly("x,y", "x*y"));

  const auto dc = poly("x,y,z", "(x^2 + y^2 + z^2)^2");
  CHECK(gcd_multi(dc, dc.derivative(0)) == poly("x,y,z", "x^2 + y^2 + z^2"));
  CHECK(repeated_part(dc) == poly("x,y,z", "x^2 + y^2 + z^2"));

  const auto p = poly("x,y", "3*x^3 - x*y + 2");
  CHECK(gcd_multi(p, p) == p.monic());
}

TEST_CASE("gcd divides both and contains the planted factor") {
  Rng rng(7);
  const auto vars = make_vars({"x", "y", "z"});
  for (int it = 0; it < 25; ++it) {
    MultiPoly a = random_form(rng, vars, static_cast<int>(uniform(rng, 1, 2)), 0.7);
    MultiPoly b = random_form(rng, vars, static_cast<int>(uniform(rng, 1, 2)), 0.7);
    MultiPoly c = random_form(rng, vars, static_cast<int>(uniform(rng, 1, 2)), 0.7);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const MultiPoly p = a * c, q = b * c;
    const MultiPoly g = gcd_multi(p, q);
    CHECK(exact_divide(p, g).has_value());
    CHECK(exact_divide(q, g).has_value());
    CHECK(exact_divide(g, c).has_value());
    CHECK(g.leading_term().second.is_one());
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(poly("x,y", "y^2 - x"), poly("x,y", "y - 1"), "y") == poly("x,y", "1 - x"));
  CHECK(resultant(poly("b,c,y", "y^2 + b*y + c"), poly("b,c,y", "2*y + b"), "y") == poly("b,c,y", "-(b^2 - 4*c)"));
  // x does not involve y: the resultant is x^deg_y(xy), vanishing exactly on the shared locus x = 0.
  CHECK(resultant(poly("x,y", "x*y"), poly("x,y", "x"), "y") == poly("x,y", "x"));
  CHECK_THROWS_AS(resultant(MultiPoly(make_vars({"x", "y"})), poly("x,y", "y"), "y"), MathError);
}

TEST_CASE("resultant vanishes iff a common factor involves the variable") {
  Rng rng(3);
  const auto vars = make_vars({"x", "y"});
  int checked = 0;
  for (int it = 0; it < 40 && checked < 20; ++it) {
    MultiPoly f = random_form(rng, vars, 2, 0.8) + poly("x,y", "1");
    MultiPoly g = random_form(rng, vars, 2, 0.8) + poly("x,y", "2");
    MultiPoly h = random_form(rng, vars, 1, 1.0) + poly("x,y", "y");
    if (f.degree_in(1) < 1 || g.degree_in(1) < 1 || h.degree_in(1) < 1) continue;
    CHECK(resultant(f * h, g * h, 1).is_zero());
    const bool coprime = gcd_multi(f, g).is_constant();
    CHECK(resultant(f, g, 1).is_zero() == !coprime);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("substitute_linear examples") {
  const auto vars = "x,y,z,t";
  const auto p = poly(vars, "t*z^3 + z^2*(x^2 + y^2)");
  const auto sub = substitute_linear(
      p, {{"x", poly(vars, "t*x")}, {"y", poly(vars, "t*y")}, {"z", poly(vars, "z - t/3*(x^2 + y^2)")}});
  const auto expect = poly(vars, "t*(z^3 - t^2/3*(x^2 + y^2)^2*z + 2*t^3/27*(x^2 + y^2)^3)");
  CHECK(sub == expect);

  const auto q = poly("x,y", "x^3 - 2*x*y + 5");
  CHECK(substitute_linear(q, {}) == q);
  CHECK(substitute_linear(q, {{"x", poly("x,y", "x")}, {"y", poly("x,y", "y")}}) == q);
  CHECK(substitute_linear(poly("x,y", "x^2"), {{"x", poly("x,y", "x + y")}}) == poly("x,y", "x^2 + 2*x*y + y^2"));
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng(5);
  const auto vars = make_vars({"x", "y", "z"});
  for (int it = 0; it < 20; ++it) {
    const MultiPoly a = random_form(rng, vars, 2, 0.5), b = random_form(rng, vars, 3, 0.4);
    std::map<std::string, MultiPoly> m{{"x", random_form(rng, vars, 1)}, {"z", random_form(rng, vars, 2, 0.5)}};
    CHECK(substitute_linear(a + b, m) == substitute_linear(a, m) + substitute_linear(b, m));
    CHECK(substitute_linear(a * b, m) == substitute_linear(a, m) * substitute_linear(b, m));
  }
}

TEST_CASE("degeneration limit") {
  const std::string ring = "ring P(1,1,2,3) vars x,y,z,w";
  auto lim = degeneration_limit(poly_in(ring, "w^2 - z^2*x^2 - z*y^4 - x^6"), WeightSystem{{2, 1, 0, 2}});
  CHECK(lim.limit == poly_in(ring, "w^2 - z^2*x^2 - z*y^4"));
  CHECK(lim.weight == 4);

  const std::string toric = "ring P(1,2,9,9) vars x1,x2,x3,x4";
  lim = degeneration_limit(poly_in(toric, "x4^2 - x3^2 - x2^9 - x1^18"), WeightSystem{{0, 0, -1, -1}});
  CHECK(lim.limit == poly_in(toric, "x4^2 - x3^2"));
  CHECK(lim.weight == -2);

  const auto p = poly("x,y", "x^3 + x*y - 7");
  CHECK(degeneration_limit(p, WeightSystem{{0, 0}}).limit == p);
}

TEST_CASE("degeneration limit is idempotent") {
  Rng rng(17);
  const auto vars = make_vars({"x", "y", "z", "w"});
  for (int it = 0; it < 20; ++it) {
    const MultiPoly p = random_form(rng, vars, 4, 0.3);
    if (p.is_zero()) continue;
    WeightSystem lam{{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)}};
    const auto once = degeneration_limit(p, lam);
    const auto twice = degeneration_limit(once.limit, lam);
    CHECK(twice.limit == once.limit);
    CHECK(twice.weight == once.weight);
  }
}

TEST_CASE("number fields") {
  // Q(sqrt 2)
  const FieldPtr k = make_field({Rational(-2), Rational(0), Rational(1)});
  const FieldElement a = FieldElement::generator(k);
  CHECK((a * a) == FieldElement(2));
  CHECK(((FieldElement(1) + a) * (FieldElement(-1) + a)) == FieldElement(1));
  CHECK((a.inverse() * a).is_one());
  CHECK_THROWS_AS(make_field({Rational(-1), Rational(0), Rational(1)}), MathError);  // x^2 - 1 reducible
  const FieldPtr k3 = make_field({Rational(-3), Rational(0), Rational(1)});
  CHECK_THROWS_AS(join_fields(k, k3), MathError);
  CHECK_THROWS_AS(a + FieldElement::generator(k3), MathError);
}

TEST_CASE("factorization over Q") {
  // (x^2 - 2)(x + 1)^2 (x^3 - x - 1)
  const QPoly f = mul(mul(QPoly{-2, 0, 1}, mul(QPoly{1, 1}, QPoly{1, 1})), QPoly{-1, -1, 0, 1});
  const auto fs = factor_q(f);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == std::pair<QPoly, int>{QPoly{1, 1}, 2});
  CHECK(fs[1] == std::pair<QPoly, int>{QPoly{-2, 0, 1}, 1});
  CHECK(fs[2] == std::pair<QPoly, int>{QPoly{-1, -1, 0, 1}, 1});
  CHECK(is_irreducible_q(QPoly{1, 0, 0, 0, 1}));      // x^4 + 1
  CHECK_FALSE(is_irreducible_q(QPoly{4, 0, 0, 0, 1}));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
}

TEST_CASE("factorization reassembles random products") {
  Rng rng(23);
  for (int it = 0; it < 15; ++it) {
    QPoly f{1};
    for (int j = 0; j < 3; ++j) {
      QPoly g;
      const int d = static_cast<int>(uniform(rng, 1, 3));
      for (int i = 0; i < d; ++i) g.push_back(Rational(uniform(rng, -4, 4)));
      g.push_back(1);
      f = mul(f, g);
    }
    QPoly back{1};
    for (const auto& [g, m] : factor_q(f)) {
      CHECK(is_irreducible_q(g));
      for (int i = 0; i < m; ++i) back = mul(back, g);
    }
    CHECK(back == monic(f));
  }
}

}  // TEST_SUITE
