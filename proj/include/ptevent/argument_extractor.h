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

#ifndef PTEVENT_ARGUMENT_EXTRACTOR_H_
#define PTEVENT_ARGUMENT_EXTRACTOR_H_

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/corpus.h"
#include "ptevent/ingestion.h"

namespace ptevent {

class EventOntology;
class QuestionTemplateSet;
class TokenLabelBackend;
class LabelInventory;

inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";

// [CLS] question [SEP] context [SEP] over word tokens.
struct QAInput {
  std::string question;
  std::string context;
  std::vector<std::string> sequence;
  size_t question_begin = 0;  // [question_begin, question_end)
  size_t question_end = 0;
  size_t context_begin = 0;  // [context_begin, context_end)
  size_t context_end = 0;
  // Code point span in `context` of each context token.
  std::vector<Span> offset_map;

  const Span& context_span(size_t sequence_index) const {
    return offset_map.at(sequence_index - context_begin);
  }
};

struct SpanLogits {
  std::vector<double> start;
  std::vector<double> end;
};

struct SpanPrediction {
  size_t start_token = 0;  // sequence indices, inclusive
  size_t end_token = 0;
  double score = 0.0;
  Span char_span;  // in the context
};

class QABackend {
 public:
  virtual ~QABackend() = default;
  virtual SpanLogits predict(const QAInput& input) = 0;
  virtual bool reentrant() const { return false; }
};

struct ExtractorConfig {
  size_t max_answer_tokens = 30;
  // Margin by which the best span must beat the [CLS] score.
  double null_threshold = 0.0;
  size_t context_window = 0;
};

// Throws FormatError for empty question or context.
QAInput assemble_input(std::string_view question, std::string_view context);

// Every context span of at most `max_answer_tokens` tokens, scored
// start[i] + end[j], best first. Ties prefer the shorter span, then the
// leftmost. Throws ShapeMismatch for logits that do not fit the input.
std::vector<SpanPrediction> valid_spans(const QAInput& input,
                                        const SpanLogits& logits,
                                        size_t max_answer_tokens);

// The best candidate's span, or nullopt (impossible) when there are no
// candidates or best_score - null_score < null_threshold, where
// null_score = start[0] + end[0].
std::optional<Span> select_answer(const std::vector<SpanPrediction>& candidates,
                                  const SpanLogits& logits,
                                  const QAInput& input, double null_threshold);

struct ExtractedArgument {
  std::string role;
  Span span;  // document coordinates

  friend bool operator==(const ExtractedArgument&,
                         const ExtractedArgument&) = default;
};

// Queries every role of the trigger's event type over a window of k
// sentences around the trigger's sentence, at `position` within `doc`.
// Impossible roles are omitted; spans are anchored in doc.text. Output is
// in role order.
std::vector<ExtractedArgument> extract_arguments(
    const Trigger& trigger, const DocumentView& doc, size_t position,
    size_t context_window, QABackend& backend, const ExtractorConfig& config,
    const QuestionTemplateSet& templates, const EventOntology& ontology,
    std::string_view sentence_id = {});

// Prediction output, one record per sentence.
struct PredictedArgument {
  size_t trigger_ref = 0;  // index into SentencePrediction::triggers
  std::string role;
  std::string sentence_id;  // sentence holding the span
  Span span;                // offsets into that sentence

  friend bool operator==(const PredictedArgument&,
                         const PredictedArgument&) = default;
};

struct SentencePrediction {
  std::string sentence_id;
  std::vector<Trigger> triggers;
  std::vector<PredictedArgument> arguments;

  friend bool operator==(const SentencePrediction&,
                         const SentencePrediction&) = default;
};

// Triggers from `trigger_backend`, then arguments for each trigger. Work is
// split by sentence over `jobs` threads; backends that are not reentrant
// are called under a lock. Output order follows the corpus.
std::vector<SentencePrediction> run_extraction(
    const Corpus& corpus, TokenLabelBackend& trigger_backend,
    QABackend& qa_backend, const ExtractorConfig& config,
    const LabelInventory& inventory, const QuestionTemplateSet& templates,
    const EventOntology& ontology, size_t jobs = 1);

std::string format_predictions_json(
    const std::vector<SentencePrediction>& predictions);
std::vector<SentencePrediction> parse_predictions_json(
    std::string_view json_text);

// Peaks on the first gold answer of a known (question, context) pair and on
// [CLS] otherwise. Built from SQuAD-shaped items.
class OracleQABackend : public QABackend {
 public:
  explicit OracleQABackend(const std::vector<QAItem>& items);
  SpanLogits predict(const QAInput& input) override;
  bool reentrant() const override { return true; }

 private:
  std::map<std::string, std::optional<Answer>> answers_;
};

// Always peaks on [CLS].
class NullQABackend : public QABackend {
 public:
  SpanLogits predict(const QAInput& input) override;
  bool reentrant() const override { return true; }
};

// Logits with `start_token`/`end_token` (sequence indices) at `peak` and
// every other position at zero.
SpanLogits peaked_logits(size_t sequence_size, size_t start_token,
                         size_t end_token, double peak = 10.0);

}  // namespace ptevent

#endif  // PTEVENT_ARGUMENT_EXTRACTOR_H_
