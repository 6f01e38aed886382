#include "crystals/verify.hpp"

#include <gtest/gtest.h>

using namespace crystals;

class SuiteSmoke : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteSmoke, PassesOnSmallGrids) {
  VerifyOptions options;
  options.max_coeff = 1;
  options.jobs = 2;
  for (const char* t : {"A1", "A2", "B2"}) {
    const auto report = run_suite(GetParam(), CartanType::parse(t), options);
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_GT(report.checked, 0u);
    EXPECT_EQ(report.checked, report.passed);
  }
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteSmoke, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (auto& ch : name) {
                             if (ch == '-') ch = '_';
                           }
                           return name;
                         });

TEST(Reports, DeterministicAcrossParallelism) {
  VerifyOptions serial;
  serial.max_coeff = 1;
  VerifyOptions parallel = serial;
  parallel.jobs = 4;
  for (const char* suite : {"theorem1", "lemma43"}) {
    auto a = run_suite(suite, CartanType::parse("A2"), serial).to_json();
    auto b = run_suite(suite, CartanType::parse("A2"), parallel).to_json();
    a.erase("seconds");
    b.erase("seconds");
    EXPECT_EQ(a, b);
  }
}

TEST(Reports, FailureCarriesCounterexample) {
  CaseResult r;
  r.check(true, [] { return Json("unused"); });
  r.check(false, [] { return Json("first"); });
  r.check(false, [] { return Json("second"); });
  EXPECT_EQ(r.checked(), 3u);
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(*r.counterexample(), Json("first"));
}

TEST(Reports, ExceptionsBecomeCounterexamples) {
  std::vector<std::pair<Json, Case>> cases;
  cases.emplace_back(Json("ok"), [](CaseResult& r) { r.check(true, [] { return Json(); }); });
  cases.emplace_back(Json("boom"), [](CaseResult&) { throw InvariantError("broken"); });
  const auto results = detail::run_cases(cases, 2);
  EXPECT_FALSE(results[0].counterexample());
  ASSERT_TRUE(results[1].counterexample());
  EXPECT_EQ((*results[1].counterexample())["case"], Json("boom"));
  EXPECT_EQ((*results[1].counterexample())["error"], Json("broken"));
}

TEST(Reports, UnknownSuite) {
  EXPECT_THROW(run_suite("nope", CartanType::parse("A1"), {}), InputError);
}

TEST(Grids, CactusDefaultsToFundamentalWeights) {
  const RootDatum a2(CartanType::parse("A2"));
  EXPECT_EQ(cactus_grid(a2, std::nullopt).size(), 2u);
  EXPECT_EQ(cactus_grid(a2, 1).size(), 4u);
}
