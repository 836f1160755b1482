// Copyright 2026 The evkb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "evkb/evaluation/evaluation.hpp"
#include "evkb/evaluation/loocv.hpp"
#include "evkb/learning/labeling.hpp"
#include "fixtures.hpp"

namespace evkb::evaluation {
namespace {

using evkb::testing::make_candidate;
using evkb::testing::shipped_ontology;
using evkb::testing::table5_candidates;

Decimal dec(std::string_view s) { return *Decimal::parse(s); }

GroundTruthEvent truth(std::string subject, std::string predicate, std::string object,
                       std::string_view amount, std::string_view date) {
  return {subject, subject, std::move(predicate), std::move(object), dec(amount), "USD",
          *parse_granular(date)};
}

TEST(WithinTenPercentTest, BoundaryAndReportedPairs) {
  EXPECT_TRUE(within_ten_percent(dec("110"), dec("100")));
  EXPECT_TRUE(within_ten_percent(dec("90"), dec("100")));
  EXPECT_FALSE(within_ten_percent(dec("110.000001"), dec("100")));
  EXPECT_FALSE(within_ten_percent(dec("89.99"), dec("100")));
  EXPECT_TRUE(within_ten_percent(dec("7.3"), dec("7.7")));
  EXPECT_TRUE(within_ten_percent(dec("7.7"), dec("7.3")));
  EXPECT_FALSE(within_ten_percent(dec("20"), dec("10.3")));
  EXPECT_FALSE(within_ten_percent(dec("10.3"), dec("20")));
}

TEST(WithinTenPercentTest, AgreesWithRationalArithmetic) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 100000);
    const std::int64_t v = static_cast<std::int64_t>(rng() % 200000);
    // |v - t| * 10 <= t over integers, scaled by 10^3.
    const bool expected = (v > t ? v - t : t - v) * 10 <= t;
    EXPECT_EQ(within_ten_percent(Decimal::from_parts(v, 3), Decimal::from_parts(t, 3)), expected);
  }
}

TEST(MatchTest, EventsMatchAcrossEquivalentPredicatesAndNouns) {
  const auto c = table5_candidates()[0];
  const auto& o = shipped_ontology();
  EXPECT_TRUE(match_event(c, truth("oracle", "acquire", "peoplesoft", "1", "2004"), o));
  EXPECT_TRUE(match_event(c, truth("oracle", "purchase", "peoplesoft", "1", "2004"), o));
  EXPECT_TRUE(match_event(c, truth("oracle", "acquisition", "peoplesoft", "1", "2004"), o));
  EXPECT_FALSE(match_event(c, truth("oracle", "sell", "peoplesoft", "1", "2004"), o));
  EXPECT_FALSE(match_event(c, truth("peoplesoft", "acquire", "oracle", "1", "2004"), o));
  EXPECT_THROW(match_event(c, truth("oracle", "teleport", "peoplesoft", "1", "2004"), o),
               UnknownPredicateError);
}

TEST(MatchTest, StrictAndRelaxedAttributes) {
  auto c = table5_candidates()[5];  // $10.3 billion, 2004
  const auto t = truth("oracle", "acquire", "peoplesoft", "10300000000", "2004");
  EXPECT_TRUE(match_attributes(c, t, MatchMode::strict));
  EXPECT_TRUE(match_attributes(c, t, MatchMode::relaxed));
  c.value.amount = dec("10000000000");
  EXPECT_FALSE(match_attributes(c, t, MatchMode::strict));
  EXPECT_TRUE(match_attributes(c, t, MatchMode::relaxed));
  c.date = *parse_granular("2005");
  EXPECT_FALSE(match_attributes(c, t, MatchMode::relaxed));
  EXPECT_TRUE(match_attributes(c, t, MatchMode::events_only));
  c.date = *parse_granular("2004-12-13");
  c.value.currency = "EUR";
  EXPECT_FALSE(match_attributes(c, t, MatchMode::relaxed));
}

TEST(MatchTest, StrictNeedsAtLeastTheTruthPrecision) {
  auto c = table5_candidates()[5];
  const auto month_truth = truth("oracle", "acquire", "peoplesoft", "10300000000", "2004-12");
  c.date = *parse_granular("2004-12-29");
  EXPECT_TRUE(match_attributes(c, month_truth, MatchMode::strict));
  c.date = *parse_granular("2004");
  EXPECT_FALSE(match_attributes(c, month_truth, MatchMode::strict));
  EXPECT_TRUE(match_attributes(c, month_truth, MatchMode::relaxed));
}

TEST(MatchTest, StrictImpliesRelaxed) {
  std::mt19937_64 rng(99);
  const auto base = table5_candidates()[0];
  for (int i = 0; i < 5000; ++i) {
    auto c = base;
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t v = rng() % 4 == 0 ? t : 1 + static_cast<std::int64_t>(rng() % 1000);
    c.value.amount = Decimal::from_integer(v);
    c.value.currency = rng() % 5 == 0 ? "EUR" : "USD";
    c.date = {make_date(2003 + static_cast<int>(rng() % 2), 1 + rng() % 2, 1 + rng() % 2),
              static_cast<Granularity>(rng() % 3)};
    GroundTruthEvent g = truth("oracle", "acquire", "peoplesoft", "1", "2003");
    g.amount = Decimal::from_integer(t);
    g.date = {make_date(2003 + static_cast<int>(rng() % 2), 1 + rng() % 2, 1 + rng() % 2),
              static_cast<Granularity>(rng() % 3)};
    if (match_attributes(c, g, MatchMode::strict)) {
      EXPECT_TRUE(match_attributes(c, g, MatchMode::relaxed));
    }
    if (match_attributes(c, g, MatchMode::relaxed)) {
      EXPECT_TRUE(match_attributes(c, g, MatchMode::events_only));
    }
  }
}

TEST(EvaluateTest, CountsAndScores) {
  const auto pool = table5_candidates();
  const std::vector<GroundTruthEvent> truths = {
      truth("oracle", "acquire", "peoplesoft", "10300000000", "2004"),
      truth("google", "buy", "youtube", "1650000000", "2006-10"),
  };
  const auto& o = shipped_ontology();
  auto r = evaluate({pool[5]}, truths, MatchMode::strict, o);
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 0u);
  EXPECT_EQ(r.fn, 1u);
  EXPECT_DOUBLE_EQ(r.precision(), 1.0);
  EXPECT_DOUBLE_EQ(r.recall(), 0.5);
  EXPECT_DOUBLE_EQ(r.f1(), 2.0 / 3.0);

  r = evaluate({pool[0], pool[5]}, truths, MatchMode::relaxed, o);
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 1u);

  // One truth cannot be matched twice.
  r = evaluate({pool[5], pool[6]}, {truths[0]}, MatchMode::events_only, o);
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 0u);

  const EvalReport empty;
  EXPECT_DOUBLE_EQ(empty.precision(), 0.0);
  EXPECT_DOUBLE_EQ(empty.f1(), 0.0);
}

TEST(EvaluateTest, CountsAddUp) {
  std::mt19937_64 rng(3);
  const auto pool = table5_candidates();
  for (int i = 0; i < 200; ++i) {
    std::vector<events::CandidateQuintuple> picks;
    for (const auto& c : pool) {
      if (rng() % 2 == 0) picks.push_back(c);
    }
    std::vector<GroundTruthEvent> truths;
    for (int k = 0; k < 3; ++k) {
      if (rng() % 2 == 0) truths.push_back(truth("oracle", "acquire", "peoplesoft", "10300000000", "2004"));
    }
    for (auto mode : {MatchMode::events_only, MatchMode::strict, MatchMode::relaxed}) {
      const auto r = evaluate(picks, truths, mode, shipped_ontology());
      EXPECT_EQ(r.tp + r.fp, picks.size());
      EXPECT_EQ(r.tp + r.fn, truths.size());
    }
  }
}

TEST(EvalReportTest, SumsCounts) {
  EvalReport a{MatchMode::relaxed, 1, 2, 3};
  a += EvalReport{MatchMode::relaxed, 4, 5, 6};
  EXPECT_EQ(a.tp, 5u);
  EXPECT_EQ(a.fp, 7u);
  EXPECT_EQ(a.fn, 9u);
}

TEST(GroundTruthIoTest, RoundTripAndBadLines) {
  evkb::testing::TempDir dir;
  const std::vector<GroundTruthEvent> truths = {
      truth("oracle", "acquire", "peoplesoft", "10300000000", "2004"),
      truth("google", "buy", "youtube", "1650000000", "2006-10"),
  };
  write_ground_truth(truths, dir / "t.jsonl");
  EXPECT_EQ(read_ground_truth(dir / "t.jsonl"), truths);
  std::ofstream(dir / "bad.jsonl")
      << R"({"company":"a","subject":"a","predicate":"buy","object":"b","amount":5,"currency":"USD","date":"2004"})"
      << "\n"
      << R"({"company":"a","subject":"a","predicate":"buy","object":"b","amount":"x","currency":"USD","date":"2004"})"
      << "\n"
      << R"({"company":"a","subject":"a","predicate":"buy","object":"b","amount":"1","currency":"USD","date":"2004-13"})"
      << "\n";
  Diagnostics diags;
  const auto read = read_ground_truth(dir / "bad.jsonl", &diags);
  ASSERT_EQ(read.size(), 1u);
  EXPECT_EQ(read[0].amount, dec("5"));
  EXPECT_EQ(diags.size(), 2u);
}

// Three companies, each with one event: an early wrong report without a
// date and a later correct report with an explicit date.
struct LoocvFixture {
  std::vector<std::vector<events::CandidateQuintuple>> events;
  std::vector<GroundTruthEvent> truths;
};

LoocvFixture loocv_fixture() {
  LoocvFixture f;
  const std::vector<std::string> companies = {"alpha", "beta", "gamma", "delta"};
  for (std::size_t i = 0; i < companies.size(); ++i) {
    const events::EventKey key{companies[i], "buy", "target" + std::to_string(i)};
    auto wrong = make_candidate(key, "500000000", {make_date(2003, 5, 1), Granularity::day},
                                make_date(2003, 5, 1), "w" + std::to_string(i));
    wrong.date_is_publication = true;
    wrong.tense = annotate::Tense::future;
    wrong.candidate_id = key.to_string() + "~r0";
    auto right = make_candidate(key, "900000000", {make_date(2004, 2, 1), Granularity::month},
                                make_date(2004, 3, 1), "r" + std::to_string(i));
    right.candidate_id = key.to_string() + "~r1";
    f.events.push_back({wrong, right});
    f.truths.push_back(truth(companies[i], "acquire", key.object_id, "900000000", "2004-02"));
  }
  // An event no truth company takes part in is left out.
  const events::EventKey other{"omega", "buy", "zeta"};
  f.events.push_back({make_candidate(other, "1", {make_date(2004, 1, 1), Granularity::year},
                                     make_date(2004, 1, 1), "o")});
  return f;
}

TEST(LabelingTest, LabelsAndCompanies) {
  const auto f = loocv_fixture();
  const auto companies = learning::truth_companies(f.truths);
  EXPECT_EQ(companies.size(), 4u);
  EXPECT_EQ(learning::company_of({"alpha", "buy", "x"}, companies), "alpha");
  EXPECT_EQ(learning::company_of({"x", "sell", "beta"}, companies), "beta");
  EXPECT_FALSE(learning::company_of({"x", "buy", "y"}, companies));
  const auto instances = learning::label_instances(f.events, f.truths, shipped_ontology());
  ASSERT_EQ(instances.size(), 9u);
  EXPECT_EQ(instances[0].label, 0.0);
  EXPECT_EQ(instances[1].label, 1.0);
  EXPECT_EQ(instances[0].company, "alpha");
  EXPECT_EQ(instances[8].company, "");
  EXPECT_EQ(instances[0].features.size(), 21u);
}

TEST(LoocvTest, SupervisedLearnsFromOtherCompanies) {
  const auto f = loocv_fixture();
  LoocvConfig config;
  config.forest.n_trees = 10;
  const auto result = loo_cv(f.events, f.truths, shipped_ontology(), config);
  ASSERT_EQ(result.folds.size(), 4u);
  for (const auto& fold : result.folds) {
    EXPECT_EQ(fold.test_events, 1u);
    EXPECT_EQ(fold.train_instances, 6u);
    EXPECT_EQ(fold.train_positives, 3u);
    ASSERT_EQ(fold.supervised_picks.size(), 1u);
  }
  using selection::Method;
  EXPECT_EQ(result.aggregate.at(Method::earliest).at(MatchMode::relaxed).tp, 0u);
  EXPECT_EQ(result.aggregate.at(Method::latest).at(MatchMode::relaxed).tp, 4u);
  EXPECT_EQ(result.aggregate.at(Method::supervised).at(MatchMode::relaxed).tp, 4u);
  EXPECT_EQ(result.aggregate.at(Method::supervised).at(MatchMode::events_only).fn, 0u);

  const auto sweep = gamma_sweep(result, f.truths, shipped_ontology(), {0.0, 0.5, 1.01});
  ASSERT_EQ(sweep.size(), 3u);
  EXPECT_EQ(sweep[0].returned, 4u);
  EXPECT_GE(sweep[0].returned, sweep[1].returned);
  EXPECT_EQ(sweep[2].returned, 0u);
}

TEST(LoocvTest, NeedsTwoCompanies) {
  auto f = loocv_fixture();
  f.truths.resize(1);
  EXPECT_THROW(loo_cv(f.events, f.truths, shipped_ontology(), {}), UsageError);
}

}  // namespace
}  // namespace evkb::evaluation
