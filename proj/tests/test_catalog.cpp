#include <set>

#include "doctest.h"
#include "dpgit/catalog.hpp"
#include "dpgit/enumer.hpp"
#include "dpgit/errors.hpp"
#include "support.hpp"

using namespace dpgit;
using namespace dpgit::test;

TEST_SUITE("catalog") {

TEST_CASE("fixture table") {
  const auto& fs = fixtures();
  CHECK(fs.size() == 13);
  std::set<std::string> names;
  for (const auto& f : fs) {
    names.insert(f.name);
    CHECK(std::filesystem::exists(data_dir() / "fixtures" / f.file));
    CHECK(std::is_sorted(f.expected_profile.begin(), f.expected_profile.end()));
    CHECK(f.degree >= 1);
    CHECK(f.degree <= 4);
  }
  CHECK(names.size() == fs.size());
  CHECK_THROWS_AS(fixture("no-such-surface"), MathError);
}

TEST_CASE("every fixture verifies") {
  for (const auto& r : verify_all(fixtures())) {
    CAPTURE(r.name);
    for (const auto& m : r.mismatches) MESSAGE(m);
    CHECK(r.ok);
    CHECK(r.profile == fixture(r.name).expected_profile);
    CHECK(r.stability == fixture(r.name).expected_stability);
  }
}

TEST_CASE("parallel and serial catalog runs agree") {
  const auto a = verify_all(fixtures());
  const auto b = verify_all_serial(fixtures());
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].ok == b[i].ok);
    CHECK(a[i].profile == b[i].profile);
    CHECK(a[i].stability == b[i].stability);
    CHECK(a[i].mismatches == b[i].mismatches);
  }
}

TEST_CASE("quotient parametrizations") {
  int seen = 0;
  for (const auto& f : fixtures()) {
    if (!f.parametrization) continue;
    ++seen;
    CAPTURE(f.name);
    CHECK(verify_parametrization(f.name));
    // Each image is invariant under the recorded cyclic action.
    const Parametrization& par = *f.parametrization;
    std::string vars;
    for (const auto& v : par.source_vars) vars += (vars.empty() ? "" : ",") + v;
    REQUIRE(par.group_weights.size() == par.source_vars.size());
    REQUIRE(par.group_order > 1);
    for (const auto& im : par.images) {
      const MultiPoly image = poly(vars, im);
      for (const auto& [e, c] : image.terms()) {
        long w = 0;
        for (size_t i = 0; i < par.group_weights.size(); ++i) w += par.group_weights[i] * e[i];
        CHECK(w % par.group_order == 0);
      }
    }
  }
  CHECK(seen == 3);
  CHECK_THROWS_AS(verify_parametrization("X3C"), MathError);
}

TEST_CASE("normal fixtures respect the local orbifold order bound") {
  for (const auto& f : fixtures()) {
    if (f.expected_profile == std::vector<std::string>{"non-normal"}) continue;
    CAPTURE(f.name);
    for (const auto& t : f.expected_profile) CHECK(order_bound_filter(f.degree, SingularityType::parse(t)));
  }
}

}  // TEST_SUITE
