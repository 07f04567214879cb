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

#ifndef PTEVENT_SCORER_H_
#define PTEVENT_SCORER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ptevent/argument_extractor.h"
#include "ptevent/corpus.h"

namespace ptevent {

// One trigger or argument to score. Offsets are relative to the sentence
// named by sentence_id, which anchors them in the document. `label` is the
// event type for triggers and the role for arguments.
struct ScoredItem {
  std::string sentence_id;
  size_t start = 0;
  size_t end = 0;
  std::string label;
  std::string text;

  friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

enum class OverlapType {
  kSameSpan,            // offsets equal, label differs
  kPredictionContains,  // prediction strictly covers the gold span
  kPredictionInside,    // prediction strictly inside the gold span
  kPartial,
};

std::string_view overlap_name(OverlapType type);

struct NearMiss {
  ScoredItem gold;
  ScoredItem predicted;
  OverlapType type = OverlapType::kPartial;
};

struct Metrics {
  size_t correct = 0;
  size_t predicted = 0;
  size_t gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Metrics from_counts(size_t correct, size_t predicted, size_t gold);
};

struct ScoreReport {
  Metrics classification;  // offsets and label
  Metrics identification;  // offsets only
  // Unmatched predictions overlapping an unmatched gold item. Reporting
  // only; never part of the metrics.
  std::vector<NearMiss> near_misses;

  double precision() const { return classification.precision; }
  double recall() const { return classification.recall; }
  double f1() const { return classification.f1; }
  size_t correct() const { return classification.correct; }
};

// Exact-match scoring with one-to-one matching: each prediction, in order,
// consumes the first unmatched gold item with the same key.
ScoreReport score_items(const std::vector<ScoredItem>& gold,
                        const std::vector<ScoredItem>& predicted);

inline ScoreReport score_triggers(const std::vector<ScoredItem>& gold,
                                  const std::vector<ScoredItem>& predicted) {
  return score_items(gold, predicted);
}

inline ScoreReport score_arguments(const std::vector<ScoredItem>& gold,
                                   const std::vector<ScoredItem>& predicted) {
  return score_items(gold, predicted);
}

// Scoring views of a gold corpus and of predictions.
std::vector<ScoredItem> trigger_items(const Corpus& corpus);
std::vector<ScoredItem> argument_items(const Corpus& corpus);
std::vector<ScoredItem> trigger_items(
    const std::vector<SentencePrediction>& predictions);
std::vector<ScoredItem> argument_items(
    const std::vector<SentencePrediction>& predictions);

// Gold corpora in prediction form, so either side of a comparison can be
// a corpus file.
std::vector<SentencePrediction> as_predictions(const Corpus& corpus);

struct TaskScore {
  std::string task;  // "triggers" or "arguments"
  ScoreReport report;
};

// Aligned plain-text table, percentages with one decimal.
std::string format_score_table(const std::vector<TaskScore>& scores);
std::string format_score_json(const std::vector<TaskScore>& scores);

}  // namespace ptevent

#endif  // PTEVENT_SCORER_H_
