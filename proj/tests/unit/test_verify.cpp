#include <doctest.h>

#include "p1z/verify.hpp"

using namespace p1z;

TEST_CASE("suite names round-trip") {
  for (auto s : {Suite::Charfun, Suite::Sections, Suite::Volume, Suite::Zariski, Suite::All}) {
    const auto parsed = parse_suite(to_string(s));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK_FALSE(parse_suite("everything").has_value());
  CHECK_FALSE(parse_suite("").has_value());
}

TEST_CASE("every suite passes with the default seed") {
  for (auto s : {Suite::Charfun, Suite::Sections, Suite::Volume, Suite::Zariski}) {
    const auto report = run_verify(s);
    CHECK_FALSE(report.checks.empty());
    for (const auto& c : report.checks) {
      INFO(c.suite, " / ", c.name, ": ", c.detail);
      CHECK(c.passed);
      CHECK(c.suite == to_string(s));
    }
    CHECK(report.passed());
    CHECK(report.failures() == 0);
  }
}

TEST_CASE("the full run is the union of the suites") {
  std::size_t total = 0;
  for (auto s : {Suite::Charfun, Suite::Sections, Suite::Volume, Suite::Zariski}) {
    total += run_verify(s, 7).checks.size();
  }
  const auto all = run_verify(Suite::All, 7);
  CHECK(all.checks.size() == total);
  CHECK(all.passed());
}
