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

#include <cstdio>

#include <nlohmann/json.hpp>

namespace ptevent {

std::string_view overlap_name(OverlapType type) {
  switch (type) {
    case OverlapType::kSameSpan: return "same_span";
    case OverlapType::kPredictionContains: return "pred_contains_gold";
    case OverlapType::kPredictionInside: return "pred_inside_gold";
    case OverlapType::kPartial: return "partial";
  }
  return "partial";
}

Metrics Metrics::from_counts(size_t correct, size_t predicted, size_t gold) {
  Metrics m;
  m.correct = correct;
  m.predicted = predicted;
  m.gold = gold;
  m.precision = predicted == 0 ? 0.0
                               : static_cast<double>(correct) /
                                     static_cast<double>(predicted);
  m.recall = gold == 0 ? 0.0
                       : static_cast<double>(correct) /
                             static_cast<double>(gold);
  m.f1 = m.precision + m.recall == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

namespace {

// Greedy one-to-one matching; returns the gold index matched by each
// prediction (or gold.size()).
std::vector<size_t> match(const std::vector<ScoredItem>& gold,
                          const std::vector<ScoredItem>& predicted,
                          bool with_label) {
  std::vector<bool> used(gold.size(), false);
  std::vector<size_t> matched(predicted.size(), gold.size());
  for (size_t p = 0; p < predicted.size(); ++p) {
    const ScoredItem& pred = predicted[p];
    for (size_t g = 0; g < gold.size(); ++g) {
      if (used[g]) continue;
      const ScoredItem& item = gold[g];
      if (item.sentence_id == pred.sentence_id && item.start == pred.start &&
          item.end == pred.end && (!with_label || item.label == pred.label)) {
        used[g] = true;
        matched[p] = g;
        break;
      }
    }
  }
  return matched;
}

size_t count_matched(const std::vector<size_t>& matched, size_t none) {
  size_t n = 0;
  for (size_t m : matched) n += m != none;
  return n;
}

}  // namespace

ScoreReport score_items(const std::vector<ScoredItem>& gold,
                        const std::vector<ScoredItem>& predicted) {
  ScoreReport report;
  const std::vector<size_t> matched = match(gold, predicted, true);
  report.classification = Metrics::from_counts(
      count_matched(matched, gold.size()), predicted.size(), gold.size());
  report.identification = Metrics::from_counts(
      count_matched(match(gold, predicted, false), gold.size()),
      predicted.size(), gold.size());

  std::vector<bool> gold_used(gold.size(), false);
  for (size_t m : matched) {
    if (m != gold.size()) gold_used[m] = true;
  }
  for (size_t p = 0; p < predicted.size(); ++p) {
    if (matched[p] != gold.size()) continue;
    const ScoredItem& pred = predicted[p];
    for (size_t g = 0; g < gold.size(); ++g) {
      const ScoredItem& item = gold[g];
      if (gold_used[g] || item.sentence_id != pred.sentence_id) continue;
      if (!(pred.start < item.end && item.start < pred.end)) continue;
      OverlapType type = OverlapType::kPartial;
      if (pred.start == item.start && pred.end == item.end) {
        type = OverlapType::kSameSpan;
      } else if (pred.start <= item.start && item.end <= pred.end) {
        type = OverlapType::kPredictionContains;
      } else if (item.start <= pred.start && pred.end <= item.end) {
        type = OverlapType::kPredictionInside;
      }
      report.near_misses.push_back(NearMiss{item, pred, type});
      break;
    }
  }
  return report;
}

std::vector<ScoredItem> trigger_items(const Corpus& corpus) {
  return trigger_items(as_predictions(corpus));
}

std::vector<ScoredItem> argument_items(const Corpus& corpus) {
  return argument_items(as_predictions(corpus));
}

std::vector<ScoredItem> trigger_items(
    const std::vector<SentencePrediction>& predictions) {
  std::vector<ScoredItem> items;
  for (const SentencePrediction& prediction : predictions) {
    for (const Trigger& trigger : prediction.triggers) {
      items.push_back(ScoredItem{prediction.sentence_id, trigger.span.start,
                                 trigger.span.end, trigger.event_type.label(),
                                 trigger.span.text});
    }
  }
  return items;
}

std::vector<ScoredItem> argument_items(
    const std::vector<SentencePrediction>& predictions) {
  std::vector<ScoredItem> items;
  for (const SentencePrediction& prediction : predictions) {
    for (const PredictedArgument& argument : prediction.arguments) {
      items.push_back(ScoredItem{argument.sentence_id, argument.span.start,
                                 argument.span.end, argument.role,
                                 argument.span.text});
    }
  }
  return items;
}

std::vector<SentencePrediction> as_predictions(const Corpus& corpus) {
  std::vector<SentencePrediction> out;
  out.reserve(corpus.sentences.size());
  for (const Sentence& sentence : corpus.sentences) {
    SentencePrediction prediction;
    prediction.sentence_id = sentence.id;
    for (size_t m = 0; m < sentence.mentions.size(); ++m) {
      const EventMention& mention = sentence.mentions[m];
      prediction.triggers.push_back(mention.trigger);
      for (const Argument& argument : mention.arguments) {
        prediction.arguments.push_back(
            PredictedArgument{m, argument.role, sentence.id, argument.span});
      }
    }
    out.push_back(std::move(prediction));
  }
  return out;
}

namespace {

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * x);
  return buf;
}

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

nlohmann::ordered_json metrics_json(const Metrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1},
          {"correct", m.correct},     {"predicted", m.predicted},
          {"gold", m.gold}};
}

nlohmann::ordered_json item_json(const ScoredItem& item) {
  return {{"sentence_id", item.sentence_id},
          {"start", item.start},
          {"end", item.end},
          {"label", item.label},
          {"text", item.text}};
}

}  // namespace

std::string format_score_table(const std::vector<TaskScore>& scores) {
  const std::vector<std::string> header = {"Task", "P", "R", "F1",
                                           "Id-P", "Id-R", "Id-F1",
                                           "Correct", "Pred", "Gold"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const TaskScore& score : scores) {
    const Metrics& c = score.report.classification;
    const Metrics& i = score.report.identification;
    rows.push_back({score.task, percent(c.precision), percent(c.recall),
                    percent(c.f1), percent(i.precision), percent(i.recall),
                    percent(i.f1), std::to_string(c.correct),
                    std::to_string(c.predicted), std::to_string(c.gold)});
  }
  std::vector<size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      out += c == 0 ? pad_right(row[c], widths[c]) : pad_left(row[c], widths[c]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out.push_back('\n');
  }
  return out;
}

std::string format_score_json(const std::vector<TaskScore>& scores) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const TaskScore& score : scores) {
    nlohmann::ordered_json entry;
    entry["classification"] = metrics_json(score.report.classification);
    entry["identification"] = metrics_json(score.report.identification);
    nlohmann::ordered_json misses = nlohmann::ordered_json::array();
    for (const NearMiss& miss : score.report.near_misses) {
      misses.push_back({{"gold", item_json(miss.gold)},
                        {"predicted", item_json(miss.predicted)},
                        {"overlap", overlap_name(miss.type)}});
    }
    entry["near_misses"] = std::move(misses);
    root[score.task] = std::move(entry);
  }
  return root.dump(2) + "\n";
}

}  // namespace ptevent
