#include <set>

#include "bicolor/verify.hpp"
#include "doctest.h"

using namespace bicolor;

TEST_CASE("every suite passes at a small order") {
  const VerifyOptions opts{4, 3};
  for (const auto& name : suite_names()) {
    const auto results = run_suite(name, opts);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      CHECK(r.suite == name);
      CHECK_MESSAGE(r.pass, r.suite << "/" << r.name << ": " << r.detail);
    }
  }
}

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  const std::set<std::string> expected{"qseries", "paths", "slices", "hankel", "closedform", "dimers", "extensions"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("qseries", {0, 1}), std::invalid_argument);
  const auto all = run_suite("all", {3, 1});
  std::set<std::string> seen;
  for (const auto& r : all) seen.insert(r.suite);
  CHECK(seen == expected);
}

TEST_CASE("sampler is deterministic and avoids excluded values") {
  RationalSampler a(9), b(9), c(10);
  bool differs = false;
  for (int k = 0; k < 50; ++k) {
    const Rat x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
    CHECK(abs(x.get_num()) <= 9);
    CHECK(x.get_den() <= 13);
  }
  CHECK(differs);
  RationalSampler s(1);
  for (int k = 0; k < 50; ++k) {
    const Rat x = s.next_avoiding({Rat(1), Rat(-1)});
    CHECK(sgn(x) != 0);
    CHECK(x != 1);
    CHECK(x != -1);
  }
}
