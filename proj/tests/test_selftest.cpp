#include "doctest.h"
#include "mdsgrs/selftest.hpp"

using namespace mdsgrs;

TEST_CASE("selftest: all suites pass up to 200") {
  SelftestOptions opt;
  opt.max_q = 200;
  const auto report = run_selftest(opt);
  CHECK(report.ok());
  CHECK(report.fields == 53);
  REQUIRE(report.suites.size() == selftest_suites().size());
  for (const auto& s : report.suites) {
    INFO(s.name);
    CHECK(s.checks > 0);
    CHECK(s.failures == 0);
  }
}

TEST_CASE("selftest: smaller range gives smaller counts") {
  SelftestOptions small, large;
  small.max_q = 13;
  large.max_q = 49;
  const auto a = run_selftest(small);
  const auto b = run_selftest(large);
  CHECK(a.ok());
  CHECK(a.fields == 6);
  for (std::size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].checks <= b.suites[i].checks);
}

TEST_CASE("selftest: deterministic") {
  SelftestOptions opt;
  opt.max_q = 81;
  const auto a = run_selftest(opt);
  const auto b = run_selftest(opt);
  for (std::size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].checks == b.suites[i].checks);
}

TEST_CASE("selftest: corrupted Zech table is caught and named") {
  SelftestOptions opt;
  opt.max_q = 13;
  opt.provider = [](std::uint64_t q) {
    auto f = make_field_of_order(q);
    return q == 13 ? f->with_corrupted_zech(3, 7) : f;
  };
  const auto report = run_selftest(opt);
  CHECK(!report.ok());
  bool named = false;
  for (const auto& s : report.suites)
    for (const auto& w : s.witnesses) named = named || w.rfind("GF(13)", 0) == 0;
  CHECK(named);
}
