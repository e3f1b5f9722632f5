#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dpgit/catalog.hpp"
#include "dpgit/document.hpp"
#include "dpgit/errors.hpp"
#include "support.hpp"

using namespace dpgit;
using namespace dpgit::test;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_SUITE("document") {

TEST_CASE("ambient spaces") {
  const auto d = parse_document("ring P(1,1,2,3) vars x,y,z,w; poly w^2 - z^3");
  CHECK(d.ambient.weights == std::vector<long>{1, 1, 2, 3});
  CHECK(d.ambient.to_string() == "P(1,1,2,3)");
  CHECK_FALSE(d.ambient.gaussian);
  CHECK(parse_document("ring P3 vars a,b,c,d").ambient.weights == std::vector<long>{1, 1, 1, 1});
  const auto g = parse_document("ring P2 over Q(i) vars x,y,z; poly x^2 + i*y^2");
  CHECK(g.ambient.gaussian);
  CHECK_FALSE(g.polys[0].poly.field() == nullptr);
}

TEST_CASE("statements") {
  const auto d = parse_document(
      "# comment\n"
      "ring P4 vars x0,x1,x2,x3,x4;\n"
      "poly q1 = x0*x1 - x2^2; poly q2 = x2^2 - x3*x4;\n"
      "matrix A = [[1, 0], [0, -1/2]];\n"
      "lambda 2, 1, 0, 2, -1;\n"
      "point 1, 0, -3/4;\n"
      "task def-X1T\n");
  REQUIRE(d.polys.size() == 2);
  CHECK(d.find_poly("q2") != nullptr);
  CHECK(d.find_poly("q3") == nullptr);
  REQUIRE(d.find_matrix("A") != nullptr);
  CHECK(d.find_matrix("A")->entries[1][1] == Rational(-1, 2));
  CHECK(*d.lambda == std::vector<long>{2, 1, 0, 2, -1});
  REQUIRE(d.point.has_value());
  CHECK((*d.point)[2] == FieldElement(Rational(-3, 4)));
  CHECK(*d.task == "def-X1T");
}

TEST_CASE("keywords end statements without a semicolon") {
  const auto a = parse_document("ring P3 vars x0,x1,x2,x3\npoly x0^3 + x1^3\npoly x2^3 - x3^3\n");
  const auto b = parse_document("ring P3 vars x0,x1,x2,x3; poly x0^3 + x1^3; poly x2^3 - x3^3;");
  CHECK(a == b);
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("ring P3 vars x0,x1,x2,x3\npoly x0 +");
  CHECK(e.line() == 2);
  CHECK(e.column() == 9);
  e = parse_error("ring P(1,1) vars x,y; poly x + u");
  CHECK(e.line() == 1);
  CHECK(e.bare_message().find("u") != std::string::npos);
  parse_error("ring P(1,1) vars x,y; poly x + 1.5*y");
  parse_error("poly x + y");
  parse_error("ring P(1,1) vars ring,y");
  parse_error("ring P(1,1) vars x,y; poly x + i*y");
  parse_error("ring P(1,1,2) vars x,y");
  parse_error("ring P(1,1) vars x,x");
  parse_error("ring P(1,1) vars x,y; poly (x + y");
  parse_error("ring P(1,1) vars x,y; matrix A = [[1, 2], [3]]");
}

TEST_CASE("print and parse round-trip on every fixture") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto doc = parse_document(slurp(data_dir() / "fixtures" / f.file));
    const std::string printed = print_document(doc);
    CHECK(parse_document(printed) == doc);
    CHECK(print_document(parse_document(printed)) == printed);
  }
}

TEST_CASE("round-trip with the other statements") {
  const auto doc = parse_document(
      "ring P(1,1,1,2) over Q(i) vars x,y,z,w; poly f = w^2 - (1 + i)*x^4; matrix M = [[1/3, 0], [2, 5]]; lambda 1, 0, -1, 2; "
      "point 0, i, 1/2; task blowup");
  CHECK(parse_document(print_document(doc)) == doc);
}

}  // TEST_SUITE
