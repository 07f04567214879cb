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

#include "ptevent/argument_extractor.h"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/iob.h"
#include "ptevent/ontology.h"
#include "ptevent/parallel.h"
#include "ptevent/templates.h"
#include "ptevent/tokenizer.h"
#include "ptevent/trigger_tagger.h"
#include "ptevent/unicode.h"

namespace ptevent {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

QAInput assemble_input(std::string_view question, std::string_view context) {
  if (question.empty() || context.empty()) {
    throw FormatError("question and context must be non-empty");
  }
  const std::vector<Token> q_tokens = tokenize(question);
  const std::vector<Token> c_tokens = tokenize(context);
  if (q_tokens.empty() || c_tokens.empty()) {
    throw FormatError("question and context must contain tokens");
  }
  QAInput input;
  input.question = std::string(question);
  input.context = std::string(context);
  input.sequence.emplace_back(kClsToken);
  input.question_begin = input.sequence.size();
  for (const Token& t : q_tokens) input.sequence.push_back(t.surface);
  input.question_end = input.sequence.size();
  input.sequence.emplace_back(kSepToken);
  input.context_begin = input.sequence.size();
  for (const Token& t : c_tokens) {
    input.sequence.push_back(t.surface);
    input.offset_map.push_back(Span{t.start, t.end, t.surface});
  }
  input.context_end = input.sequence.size();
  input.sequence.emplace_back(kSepToken);
  return input;
}

namespace {

void check_logits(const QAInput& input, const SpanLogits& logits) {
  if (logits.start.size() != input.sequence.size() ||
      logits.end.size() != input.sequence.size()) {
    throw ShapeMismatch("logits of length " +
                        std::to_string(logits.start.size()) + "/" +
                        std::to_string(logits.end.size()) +
                        " for a sequence of " +
                        std::to_string(input.sequence.size()) + " tokens");
  }
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(logits.start.begin(), logits.start.end(), finite) ||
      !std::all_of(logits.end.begin(), logits.end.end(), finite)) {
    throw ShapeMismatch("non-finite logits");
  }
}

}  // namespace

std::vector<SpanPrediction> valid_spans(const QAInput& input,
                                        const SpanLogits& logits,
                                        size_t max_answer_tokens) {
  check_logits(input, logits);
  const std::u32string context = unicode::to_u32(input.context);
  std::vector<SpanPrediction> candidates;
  for (size_t i = input.context_begin; i < input.context_end; ++i) {
    const size_t j_end =
        std::min(input.context_end, i + max_answer_tokens);
    for (size_t j = i; j < j_end; ++j) {
      SpanPrediction p;
      p.start_token = i;
      p.end_token = j;
      p.score = logits.start[i] + logits.end[j];
      p.char_span = make_span(context, input.context_span(i).start,
                              input.context_span(j).end);
      candidates.push_back(std::move(p));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const SpanPrediction& a, const SpanPrediction& b) {
              if (a.score != b.score) return a.score > b.score;
              const size_t la = a.end_token - a.start_token;
              const size_t lb = b.end_token - b.start_token;
              if (la != lb) return la < lb;
              return a.start_token < b.start_token;
            });
  return candidates;
}

std::optional<Span> select_answer(const std::vector<SpanPrediction>& candidates,
                                  const SpanLogits& logits,
                                  const QAInput& input, double null_threshold) {
  if (candidates.empty()) return std::nullopt;
  check_logits(input, logits);
  const double null_score = logits.start[0] + logits.end[0];
  const SpanPrediction& best = candidates.front();
  if (best.score - null_score < null_threshold) return std::nullopt;
  return best.char_span;
}

std::vector<ExtractedArgument> extract_arguments(
    const Trigger& trigger, const DocumentView& doc, size_t position,
    size_t context_window, QABackend& backend, const ExtractorConfig& config,
    const QuestionTemplateSet& templates, const EventOntology& ontology,
    std::string_view sentence_id) {
  const std::string label = trigger.event_type.label();
  const ContextWindow window =
      make_context_window(doc, position, context_window);
  const std::u32string doc_text = unicode::to_u32(doc.text);

  std::vector<ExtractedArgument> out;
  for (const std::string& role : ontology.role_set(label)) {
    const std::string question =
        contextualize(templates.question_for(label, role), trigger.span.text);
    const QAInput input = assemble_input(question, window.text);
    SpanLogits logits;
    try {
      logits = backend.predict(input);
    } catch (const std::exception& e) {
      throw BackendError("sentence '" + std::string(sentence_id) +
                         "', role " + role + ": QA backend failed: " +
                         e.what());
    }
    std::optional<Span> answer;
    try {
      answer = select_answer(
          valid_spans(input, logits, config.max_answer_tokens), logits, input,
          config.null_threshold);
    } catch (const ShapeMismatch& e) {
      throw BackendError("sentence '" + std::string(sentence_id) +
                         "', role " + role + ": " + e.what());
    }
    if (!answer) continue;
    out.push_back(ExtractedArgument{
        role, make_span(doc_text, answer->start + window.doc_offset,
                        answer->end + window.doc_offset)});
  }
  return out;
}

std::vector<SentencePrediction> run_extraction(
    const Corpus& corpus, TokenLabelBackend& trigger_backend,
    QABackend& qa_backend, const ExtractorConfig& config,
    const LabelInventory& inventory, const QuestionTemplateSet& templates,
    const EventOntology& ontology, size_t jobs) {
  const std::vector<DocumentView> documents = group_documents(corpus);
  struct Location {
    size_t doc = 0;
    size_t position = 0;
  };
  std::vector<Location> locations(corpus.sentences.size());
  for (size_t d = 0; d < documents.size(); ++d) {
    for (size_t p = 0; p < documents[d].sentence_indices.size(); ++p) {
      locations[documents[d].sentence_indices[p]] = {d, p};
    }
  }

  std::mutex trigger_mu;
  std::mutex qa_mu;
  struct LockedQA : QABackend {
    QABackend& inner;
    std::mutex* mu;
    LockedQA(QABackend& b, std::mutex* m) : inner(b), mu(m) {}
    SpanLogits predict(const QAInput& input) override {
      if (mu == nullptr) return inner.predict(input);
      std::lock_guard lock(*mu);
      return inner.predict(input);
    }
  };

  std::vector<SentencePrediction> predictions(corpus.sentences.size());
  parallel_for(corpus.sentences.size(), jobs, [&](size_t i) {
    const Sentence& sentence = corpus.sentences[i];
    const DocumentView& doc = documents[locations[i].doc];
    SentencePrediction& out = predictions[i];
    out.sentence_id = sentence.id;
    if (trigger_backend.reentrant()) {
      out.triggers = predict_triggers(sentence, trigger_backend, inventory);
    } else {
      std::lock_guard lock(trigger_mu);
      out.triggers = predict_triggers(sentence, trigger_backend, inventory);
    }

    LockedQA qa(qa_backend, qa_backend.reentrant() ? nullptr : &qa_mu);
    for (size_t t = 0; t < out.triggers.size(); ++t) {
      const auto arguments = extract_arguments(
          out.triggers[t], doc, locations[i].position, config.context_window,
          qa, config, templates, ontology, sentence.id);
      for (const ExtractedArgument& argument : arguments) {
        // Re-anchor in the sentence holding the span; spans that straddle
        // two sentences have no sentence-level representation.
        for (size_t p = 0; p < doc.sentence_indices.size(); ++p) {
          const Sentence& holder = corpus.sentences[doc.sentence_indices[p]];
          const size_t base = doc.sentence_offsets[p];
          const size_t length = unicode::length(holder.text);
          if (argument.span.start >= base &&
              argument.span.end <= base + length) {
            out.arguments.push_back(PredictedArgument{
                t, argument.role, holder.id,
                make_span(holder.text, argument.span.start - base,
                          argument.span.end - base)});
            break;
          }
        }
      }
    }
  });
  return predictions;
}

std::string format_predictions_json(
    const std::vector<SentencePrediction>& predictions) {
  ordered_json root = ordered_json::array();
  for (const SentencePrediction& prediction : predictions) {
    ordered_json record;
    record["id"] = prediction.sentence_id;
    ordered_json triggers = ordered_json::array();
    for (const Trigger& trigger : prediction.triggers) {
      triggers.push_back({{"text", trigger.span.text},
                          {"start", trigger.span.start},
                          {"end", trigger.span.end},
                          {"event_type", trigger.event_type.label()}});
    }
    record["triggers"] = std::move(triggers);
    ordered_json arguments = ordered_json::array();
    for (const PredictedArgument& argument : prediction.arguments) {
      arguments.push_back({{"trigger_ref", argument.trigger_ref},
                           {"role", argument.role},
                           {"text", argument.span.text},
                           {"start", argument.span.start},
                           {"end", argument.span.end},
                           {"sentence_id", argument.sentence_id}});
    }
    record["arguments"] = std::move(arguments);
    root.push_back(std::move(record));
  }
  return root.dump(2) + "\n";
}

std::vector<SentencePrediction> parse_predictions_json(
    std::string_view json_text) {
  try {
    const json root = json::parse(json_text);
    if (!root.is_array()) throw FormatError("predictions: expected a list");
    std::vector<SentencePrediction> out;
    for (const json& record : root) {
      SentencePrediction prediction;
      prediction.sentence_id = record.at("id").get<std::string>();
      for (const json& jt : record.at("triggers")) {
        const auto start = jt.at("start").get<size_t>();
        const auto end = jt.at("end").get<size_t>();
        if (start >= end) throw OffsetError("predictions: empty trigger span");
        prediction.triggers.push_back(
            Trigger{Span{start, end, jt.at("text").get<std::string>()},
                    EventType::parse(jt.at("event_type").get<std::string>())});
      }
      for (const json& ja : record.at("arguments")) {
        PredictedArgument argument;
        argument.trigger_ref = ja.at("trigger_ref").get<size_t>();
        if (argument.trigger_ref >= prediction.triggers.size()) {
          throw FormatError("predictions: trigger_ref out of range in '" +
                            prediction.sentence_id + "'");
        }
        argument.role = ja.at("role").get<std::string>();
        argument.sentence_id =
            ja.value("sentence_id", prediction.sentence_id);
        argument.span = Span{ja.at("start").get<size_t>(),
                             ja.at("end").get<size_t>(),
                             ja.at("text").get<std::string>()};
        if (argument.span.start >= argument.span.end) {
          throw OffsetError("predictions: empty argument span");
        }
        prediction.arguments.push_back(std::move(argument));
      }
      out.push_back(std::move(prediction));
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("predictions: ") + e.what());
  }
}

SpanLogits peaked_logits(size_t sequence_size, size_t start_token,
                         size_t end_token, double peak) {
  SpanLogits logits;
  logits.start.assign(sequence_size, 0.0);
  logits.end.assign(sequence_size, 0.0);
  logits.start.at(start_token) = peak;
  logits.end.at(end_token) = peak;
  return logits;
}

namespace {

std::string qa_key(std::string_view question, std::string_view context) {
  std::string key(question);
  key.push_back('\x1f');
  key += context;
  return key;
}

}  // namespace

OracleQABackend::OracleQABackend(const std::vector<QAItem>& items) {
  for (const QAItem& item : items) {
    std::optional<Answer> answer;
    if (!item.answers.empty()) answer = item.answers.front();
    answers_.emplace(qa_key(item.question, item.context), std::move(answer));
  }
}

SpanLogits OracleQABackend::predict(const QAInput& input) {
  auto it = answers_.find(qa_key(input.question, input.context));
  if (it == answers_.end() || !it->second) {
    return peaked_logits(input.sequence.size(), 0, 0);
  }
  const size_t start = it->second->answer_start;
  const size_t end = start + unicode::length(it->second->text);
  size_t first = input.context_end;
  size_t last = input.context_end;
  for (size_t i = input.context_begin; i < input.context_end; ++i) {
    const Span& span = input.context_span(i);
    if (first == input.context_end && span.end > start) first = i;
    if (span.start < end) last = i;
  }
  if (first == input.context_end || last == input.context_end || first > last) {
    return peaked_logits(input.sequence.size(), 0, 0);
  }
  return peaked_logits(input.sequence.size(), first, last);
}

SpanLogits NullQABackend::predict(const QAInput& input) {
  return peaked_logits(input.sequence.size(), 0, 0);
}

}  // namespace ptevent
