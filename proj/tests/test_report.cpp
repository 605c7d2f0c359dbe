#include <gtest/gtest.h>

#include <algorithm>

#include "c4lab/report.hpp"
#include "c4lab/rng.hpp"

using namespace c4lab;

namespace {

ExperimentReport sample() {
  ExperimentReport r("demo");
  r.params() = {{"q", 8}, {"t", 3}, {"seed", nullptr}, {"trials", 1}};
  r.measured() = {{"c4_count", 21}, {"mean", 1.5}, {"list", {1, 2}}};
  r.bounds() = {{"t(q-1)", 21}};
  r.verdict("exact", "21 == 21", true);
  r.verdict("soft", "1 <= 0", false, VerdictKind::Informative);
  return r;
}

}  // namespace

TEST(Report, JsonLayout) {
  const auto j = sample().to_json();
  for (const char* key : {"experiment", "params", "measured", "bounds", "verdicts", "passed"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["experiment"], "demo");
  EXPECT_EQ(j["verdicts"]["exact"]["kind"], "required");
  EXPECT_EQ(j["verdicts"]["soft"]["kind"], "informative");
  EXPECT_EQ(j["verdicts"]["soft"]["inequality"], "1 <= 0");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_FALSE(j.contains("config"));
}

TEST(Report, TimingIsSeparable) {
  auto a = sample();
  auto b = sample();
  a.set_wall_ms(12.5);
  b.set_wall_ms(99.0);
  EXPECT_EQ(a.to_json()["timing"]["wall_ms"], 12.5);
  EXPECT_NE(a.dump(true), b.dump(true));
  EXPECT_EQ(a.dump(false), b.dump(false));
  a.set_config({{"seed", 4}});
  EXPECT_EQ(a.to_json(false)["config"]["seed"], 4);
}

TEST(Report, RequiredFailuresDecidePassed) {
  auto r = sample();
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.failures().empty());
  EXPECT_FALSE(r.verdict_holds("soft"));
  r.verdict("hard", "3 <= 2", false);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.failures().size(), 1u);
  EXPECT_EQ(r.failures()[0], "hard: 3 <= 2");
  EXPECT_THROW(r.verdict_holds("missing"), std::out_of_range);
}

TEST(Report, CsvRowSkipsStructuredValues) {
  EXPECT_EQ(ExperimentReport::csv_header(), "experiment,q,t,seed,trials,passed,measured\n");
  EXPECT_EQ(sample().csv_row(), "demo,8,3,,1,true,c4_count=21;mean=1.5\n");
}

TEST(Rng, CounterStreamsAreStable) {
  CounterRng a(7, 0), b(7, 0), c(7, 1);
  EXPECT_EQ(a.at(5), b.at(5));
  EXPECT_NE(a.at(5), c.at(5));
  std::uint64_t first = a();
  EXPECT_EQ(first, b());
  for (int i = 0; i < 1000; ++i) EXPECT_LT(a.below(13), 13u);
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  a.shuffle(v);
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Rng, BelowIsRoughlyUniform) {
  CounterRng r(1, 9);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) ++hist[r.below(6)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}
