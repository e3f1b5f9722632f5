#include <algorithm>

#include "doctest.h"
#include "dpgit/enumer.hpp"
#include "dpgit/errors.hpp"
#include "dpgit/germ.hpp"
#include "dpgit/singular.hpp"
#include "support.hpp"

using namespace dpgit;
using namespace dpgit::test;

namespace {

const char* kP3 = "x0,x1,x2,x3";

std::vector<std::string> types_of(const SurfaceProfile& p) {
  auto v = p.type_strings();
  std::sort(v.begin(), v.end());
  return v;
}

QuadricPencil diagonal_pencil(const std::vector<long>& lambda) {
  QuadricPencil p;
  p.A = QMat(5, QVec(5, Rational(0)));
  p.B = p.A;
  for (int i = 0; i < 5; ++i) {
    p.A[i][i] = 1;
    p.B[i][i] = lambda[i];
  }
  return p;
}

}  // namespace

TEST_SUITE("singular") {

TEST_CASE("cubic surfaces") {
  const auto cayley = profile_cubic(poly(kP3, "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1"));
  CHECK(types_of(cayley) == std::vector<std::string>{"A1", "A1", "A1", "A1"});
  CHECK(cayley.degree == 3);
  // The nodes sit at the coordinate points.
  for (const auto& sp : cayley.singular_points) {
    int nonzero = 0;
    for (const auto& c : sp.point) nonzero += !c.is_zero();
    CHECK(nonzero == 1);
  }
  CHECK(types_of(profile_cubic(poly(kP3, "x1*x2*x3 - x0^3"))) == std::vector<std::string>{"A2", "A2", "A2"});
  CHECK(profile_cubic(poly(kP3, "x0^3 + x1^3 + x2^3 + x3^3")).singular_points.empty());
  CHECK(types_of(profile_cubic(poly(kP3, "x3*x0^2 + x1^3 + x2^3"))) == std::vector<std::string>{"D4"});
}

TEST_CASE("irrational singular points come as clusters") {
  // Singular exactly at [+-sqrt 2 : 0 : 0 : 1]; rank-2 quadratic part plus x2^3 gives A2.
  const auto prof = profile_cubic(poly(kP3, "(x0^2 - 2*x3^2)*x1 + x2^3 + x1^3"));
  REQUIRE(prof.singular_points.size() == 1);
  CHECK(prof.singular_points[0].cluster_size == 2);
  CHECK(types_of(prof) == std::vector<std::string>{"A2", "A2"});
}

TEST_CASE("cubic profiles are invariant under linear changes") {
  Rng rng(41);
  const std::vector<std::string> cubics{"x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1", "x1*x2*x3 - x0^3",
                                        "x3*x0^2 + x1^3 + x2^3"};
  for (const auto& c : cubics) {
    const MultiPoly F = poly(kP3, c);
    const auto want = types_of(profile_cubic(F));
    for (int it = 0; it < 2; ++it) {
      const MultiPoly G = linear_change(F, random_invertible(rng, 4, 2));
      CAPTURE(G.to_string());
      CHECK(types_of(profile_cubic(G)) == want);
    }
  }
}

TEST_CASE("diagonal pencils") {
  CHECK(profile_pencil(diagonal_pencil({0, 1, 2, 3, 4})).singular_points.empty());
  CHECK(types_of(profile_pencil(diagonal_pencil({0, 0, 1, 2, 3}))) == std::vector<std::string>{"A1", "A1"});
  CHECK(types_of(profile_pencil(diagonal_pencil({0, 0, 1, 1, 2}))) == std::vector<std::string>{"A1", "A1", "A1", "A1"});
  const auto p = diagonal_pencil({0, 1, 2, 3, 4});
  CHECK(pencil_determinant(p) == poly("s,t", "s*(s + t)*(s + 2*t)*(s + 3*t)*(s + 4*t)"));
  CHECK(simultaneously_diagonalizable(p));
  CHECK_THROWS_AS(profile_pencil(QuadricPencil{QMat(5, QVec(5, Rational(0))), QMat(5, QVec(5, Rational(0)))}), MathError);
}

TEST_CASE("two quadrics from equations") {
  const auto P = pencil_from_quadrics(poly("x0,x1,x2,x3,x4", "x0*x1 - x2^2"), poly("x0,x1,x2,x3,x4", "x2^2 - x3*x4"));
  CHECK(types_of(profile_pencil(P)) == std::vector<std::string>{"A1", "A1", "A1", "A1"});
  CHECK(simultaneously_diagonalizable(P));
}

TEST_CASE("non-diagonalizable pencil") {
  // One 2x2 Jordan block: A^-1 B is not semisimple.
  QuadricPencil P;
  P.A = QMat(5, QVec(5, Rational(0)));
  P.B = P.A;
  P.A[0][1] = P.A[1][0] = 1;
  P.B[0][1] = P.B[1][0] = 0;
  P.B[1][1] = 1;
  for (int i = 2; i < 5; ++i) {
    P.A[i][i] = 1;
    P.B[i][i] = i;
  }
  CHECK_FALSE(simultaneously_diagonalizable(P));
  CHECK(types_of(profile_pencil(P)) == std::vector<std::string>{"A1"});
}

TEST_CASE("double covers") {
  CHECK(types_of(profile_double_cover(BaseSpace::P129, poly_in("ring P(1,2,9) vars x1,x2,x3", "x2^9 - x3^2"))) ==
        std::vector<std::string>{"1/9(1,2)", "1/9(1,2)", "A8"});
  CHECK(types_of(profile_double_cover(BaseSpace::P112, poly_in("ring P(1,1,2) vars x,y,z", "z^2*x^2 + z*y^4"))) ==
        std::vector<std::string>{"1/8(1,3)", "A7"});
  CHECK(types_of(profile_double_cover(BaseSpace::P114, poly_in("ring P(1,1,4) vars x1,x2,x3", "x1^4*x2^4 - x3^2"))) ==
        std::vector<std::string>{"1/4(1,1)", "1/4(1,1)", "A3", "A3"});
  CHECK(profile_double_cover(BaseSpace::P2, poly("x,y,z", "x^4 + y^4 + z^4")).singular_points.empty());
  CHECK(profile_double_cover(BaseSpace::P2, poly("x,y,z", "x^4 + y^4 + z^4")).degree == 2);
  // Through the vertex of P(1,1,4)
  CHECK_THROWS_AS(profile_double_cover(BaseSpace::P114, poly_in("ring P(1,1,4) vars x1,x2,x3", "x3*(x1^4 + x2^4) + x1^8 - x2^8")), MathError);
  // Wrong degree for the base
  CHECK_THROWS_AS(profile_double_cover(BaseSpace::P2, poly("x,y,z", "x^3 + y^3 + z^3")), MathError);
  const auto dc = profile_double_cover(BaseSpace::P2, poly("x,y,z", "(x^2 + y^2 + z^2)^2"));
  CHECK_FALSE(dc.is_normal);
  CHECK(types_of(dc) == std::vector<std::string>{"non-normal"});
}

TEST_CASE("plane quartic curves") {
  CHECK(types_of(profile_plane_curve(poly("x,y,z", "(z^2 + x*y)*(2*z^2 + x*y)"))) == std::vector<std::string>{"A3", "A3"});
  CHECK(types_of(profile_plane_curve(poly("x,y,z", "(z^2 + x*y)*x*y"))) == std::vector<std::string>{"A1", "A3", "A3"});
  CHECK(profile_plane_curve(poly("x,y,z", "x^4 + y^4 + z^4")).singular_points.empty());
}

TEST_CASE("bases") {
  for (BaseSpace b : {BaseSpace::P2, BaseSpace::P112, BaseSpace::P114, BaseSpace::P129}) CHECK(parse_base(to_string(b)) == b);
  CHECK(branch_degree(BaseSpace::P2) == 4);
  CHECK(branch_degree(BaseSpace::P112) == 6);
  CHECK(branch_degree(BaseSpace::P114) == 8);
  CHECK(branch_degree(BaseSpace::P129) == 18);
}

TEST_CASE("Du Val profiles satisfy the Milnor bound") {
  const std::vector<std::pair<int, std::string>> cubics{{3, "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1"},
                                                        {3, "x1*x2*x3 - x0^3"}};
  for (const auto& [d, c] : cubics) {
    int mu = 0;
    for (const auto& t : profile_cubic(poly(kP3, c)).types()) mu += *t.milnor();
    CHECK(mu <= 9 - d);
  }
  int mu = 0;
  for (const auto& t : profile_pencil(diagonal_pencil({0, 0, 1, 1, 2})).types()) mu += *t.milnor();
  CHECK(mu <= 9 - 4);
}

}  // TEST_SUITE
