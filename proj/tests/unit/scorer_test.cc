// Copyright 2026 The ptevent Authors.
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

#include "ptevent/scorer.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ptevent/ingestion.h"
#include "ptevent/ontology.h"
#include "support/oracles.h"
#include "support/test_data.h"

namespace ptevent {
namespace {

ScoredItem item(size_t start, size_t end, std::string label,
                std::string sentence = "s") {
  return ScoredItem{std::move(sentence), start, end, std::move(label), ""};
}

TEST(ScorerTest, PrecisionRecallF1) {
  const std::vector<ScoredItem> gold = {item(0, 5, "Victim"), item(6, 9, "Place"),
                                        item(10, 12, "Time"),
                                        item(13, 20, "Agent")};
  const std::vector<ScoredItem> pred = {item(0, 5, "Victim"),
                                        item(6, 9, "Time")};
  const ScoreReport report = score_arguments(gold, pred);
  EXPECT_EQ(report.correct(), 1u);
  EXPECT_DOUBLE_EQ(report.precision(), 0.5);
  EXPECT_DOUBLE_EQ(report.recall(), 0.25);
  EXPECT_DOUBLE_EQ(report.f1(), 1.0 / 3.0);
  EXPECT_EQ(report.identification.correct, 2u);
  ASSERT_EQ(report.near_misses.size(), 1u);
  EXPECT_EQ(report.near_misses[0].type, OverlapType::kSameSpan);
}

TEST(ScorerTest, EmptyInputsScoreZero) {
  const ScoreReport none = score_triggers({}, {});
  EXPECT_EQ(none.precision(), 0.0);
  EXPECT_EQ(none.recall(), 0.0);
  EXPECT_EQ(none.f1(), 0.0);
  const ScoreReport no_pred = score_triggers({item(0, 1, "Life.Die")}, {});
  EXPECT_EQ(no_pred.recall(), 0.0);
}

TEST(ScorerTest, DuplicatePredictionsAreCreditedOnce) {
  const ScoreReport report =
      score_triggers({item(0, 6, "Life.Die")},
                     {item(0, 6, "Life.Die"), item(0, 6, "Life.Die")});
  EXPECT_EQ(report.correct(), 1u);
  EXPECT_DOUBLE_EQ(report.precision(), 0.5);
  EXPECT_DOUBLE_EQ(report.recall(), 1.0);
}

TEST(ScorerTest, SentenceIdsKeepOffsetsApart) {
  const ScoreReport report = score_triggers({item(0, 6, "Life.Die", "a")},
                                            {item(0, 6, "Life.Die", "b")});
  EXPECT_EQ(report.correct(), 0u);
  EXPECT_TRUE(report.near_misses.empty());
}

TEST(ScorerTest, DeterminerNearMissGetsNoCredit) {
  // "A polícia prendeu o ex-banqueiro sênior Callum McCarthy em Londres."
  const ScoredItem gold{"doc-c-0", 20, 55, "Person",
                        "ex-banqueiro sênior Callum McCarthy"};
  const ScoredItem pred{"doc-c-0", 18, 55, "Person",
                        "o ex-banqueiro sênior Callum McCarthy"};
  const ScoreReport report = score_arguments({gold}, {pred});
  EXPECT_EQ(report.correct(), 0u);
  EXPECT_EQ(report.f1(), 0.0);
  ASSERT_EQ(report.near_misses.size(), 1u);
  EXPECT_EQ(report.near_misses[0].type, OverlapType::kPredictionContains);
  EXPECT_EQ(report.near_misses[0].gold, gold);
  EXPECT_EQ(report.near_misses[0].predicted, pred);
}

TEST(ScorerTest, NearMissTaxonomy) {
  const auto inside = score_arguments({item(0, 10, "A")}, {item(2, 5, "A")});
  EXPECT_EQ(inside.near_misses[0].type, OverlapType::kPredictionInside);
  const auto partial = score_arguments({item(0, 10, "A")}, {item(5, 15, "A")});
  EXPECT_EQ(partial.near_misses[0].type, OverlapType::kPartial);
  const auto disjoint = score_arguments({item(0, 10, "A")}, {item(10, 15, "A")});
  EXPECT_TRUE(disjoint.near_misses.empty());
}

TEST(ScorerTest, GreedyEqualsOptimalMatching) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<size_t> count(0, 6);
  std::uniform_int_distribution<size_t> pos(0, 2);
  std::uniform_int_distribution<size_t> label(0, 1);
  const char* labels[] = {"A", "B"};
  for (int n = 0; n < 3000; ++n) {
    std::vector<ScoredItem> gold, pred;
    for (size_t i = count(rng); i > 0; --i) {
      const size_t s = pos(rng);
      gold.push_back(item(s, s + 1, labels[label(rng)]));
    }
    for (size_t i = count(rng); i > 0; --i) {
      const size_t s = pos(rng);
      pred.push_back(item(s, s + 1, labels[label(rng)]));
    }
    const ScoreReport report = score_items(gold, pred);
    ASSERT_EQ(report.correct(), oracle::max_matching(gold, pred));

    std::shuffle(gold.begin(), gold.end(), rng);
    std::shuffle(pred.begin(), pred.end(), rng);
    ASSERT_EQ(score_items(gold, pred).correct(), report.correct());
  }
}

TEST(ScorerTest, CorpusViewsAgreeWithPredictionViews) {
  const Corpus corpus = read_ace_json(testing::test_data("synthetic.json"),
                                      EventOntology::bundled());
  const auto predictions = as_predictions(corpus);
  EXPECT_EQ(trigger_items(corpus), trigger_items(predictions));
  EXPECT_EQ(argument_items(corpus).size(), 47u);
  const ScoreReport self = score_arguments(argument_items(corpus),
                                           argument_items(predictions));
  EXPECT_EQ(self.f1(), 1.0);
}

TEST(ScoreFormatTest, TableUsesOneDecimalPercentages) {
  const std::vector<ScoredItem> gold = {item(0, 5, "A"), item(6, 9, "B"),
                                        item(10, 12, "C"), item(13, 20, "D")};
  const std::vector<ScoredItem> pred = {item(0, 5, "A"), item(6, 9, "C")};
  const std::string table =
      format_score_table({{"arguments", score_arguments(gold, pred)}});
  EXPECT_EQ(table,
            "Task          P     R    F1   Id-P  Id-R  Id-F1  Correct  Pred  Gold\n"
            "arguments  50.0  25.0  33.3  100.0  50.0   66.7        1     2     4\n");
}

TEST(ScoreFormatTest, JsonReportListsNearMisses) {
  const auto report = score_arguments({item(0, 10, "A")}, {item(2, 5, "A")});
  const auto doc =
      nlohmann::json::parse(format_score_json({{"arguments", report}}));
  EXPECT_EQ(doc["arguments"]["classification"]["correct"], 0);
  EXPECT_EQ(doc["arguments"]["near_misses"][0]["overlap"], "pred_inside_gold");
}

}  // namespace
}  // namespace ptevent
