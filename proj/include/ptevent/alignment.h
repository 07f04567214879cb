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

#ifndef PTEVENT_ALIGNMENT_H_
#define PTEVENT_ALIGNMENT_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/clients.h"
#include "ptevent/corpus.h"

namespace ptevent {

// Cascade stages in the order they run.
enum class Stage { kExact = 0, kLemma, kDictionary, kAligner, kFuzzy };
inline constexpr size_t kStageCount = 5;

enum class AlignStatus { kExact, kLemma, kDictionary, kAligner, kFuzzy,
                         kUnaligned };

std::string_view stage_name(Stage stage);
std::string_view status_name(AlignStatus status);
Stage parse_stage(std::string_view name);
// Comma-separated stage names; result is in cascade order.
std::vector<Stage> parse_stage_list(std::string_view list);

struct AlignmentResult {
  std::optional<Span> span;  // absent iff status == kUnaligned
  AlignStatus status = AlignStatus::kUnaligned;
  double score = 0.0;  // 1.0 except for fuzzy matches
  // Stages that ran, in order; the last one is the one that succeeded
  // unless the annotation stayed unaligned.
  std::vector<Stage> attempted;
};

struct AlignmentConfig {
  std::vector<Stage> stages = {Stage::kExact, Stage::kLemma,
                               Stage::kDictionary, Stage::kAligner,
                               Stage::kFuzzy};
  double fuzzy_threshold = 0.5;
  std::string src_lang = "en";
  std::string tgt_lang = "pt";
};

// Non-owning. A null client disables the stages that need it.
struct AlignmentClients {
  MTClient* mt = nullptr;
  DictionaryClient* dictionary = nullptr;
  WordAligner* aligner = nullptr;
  Lemmatizer* lemmatizer = nullptr;
};

// Leftmost token-aligned occurrence of `needle` in `sentence`, compared
// after NFC case folding.
std::optional<Span> stage_exact(const Sentence& tgt_sentence,
                                std::string_view needle);

// Leftmost run of target tokens whose lemmas equal the annotation lemmas.
std::optional<Span> stage_lemma_match(const Sentence& tgt_sentence,
                                      const std::vector<std::string>& ann_tokens,
                                      Lemmatizer& lemmatizer);

// Projects source annotation tokens [first, last] through the aligner and
// returns the minimal contiguous span covering every linked target token.
std::optional<Span> stage_word_aligner(
    const Sentence& src_sentence, const Sentence& tgt_sentence,
    std::pair<size_t, size_t> src_ann_token_range, WordAligner& aligner);

struct FuzzyMatch {
  Span span;
  double score = 0.0;
};

// Best-scoring token n-gram (n up to the annotation's token count + 2) by
// max(Levenshtein similarity, gestalt ratio). Accepted when the score
// exceeds `threshold`; ties prefer fewer tokens, then the leftmost.
std::optional<FuzzyMatch> stage_fuzzy(const Sentence& tgt_sentence,
                                      std::string_view ann_text,
                                      double threshold);

// Runs the configured stages in order and returns the first success.
// `tgt_sentence` is the translation of `src_sentence`, tokenized;
// `translated_ann_text` is the translation of the annotation on its own.
AlignmentResult align_annotation(const Sentence& src_sentence,
                                 const Sentence& tgt_sentence,
                                 const Span& src_ann_span,
                                 const std::string& translated_ann_text,
                                 const AlignmentClients& clients,
                                 const AlignmentConfig& config);

// Machine translations of one source sentence and its annotations.
struct SentenceTranslation {
  Sentence source;
  std::string target_text;
  std::vector<std::string> trigger_translations;  // per mention
  std::vector<std::vector<std::string>> argument_translations;
};

struct TranslationBundle {
  std::string src_lang;
  std::string tgt_lang;
  std::vector<SentenceTranslation> sentences;
};

struct UnalignedAnnotation {
  std::string sentence_id;
  std::string annotation_text;
  std::string kind;  // "trigger" or "argument"

  friend bool operator==(const UnalignedAnnotation&,
                         const UnalignedAnnotation&) = default;
};

struct AlignmentReport {
  std::array<size_t, kStageCount> attempted{};
  std::array<size_t, kStageCount> resolved{};
  size_t unaligned_count = 0;
  size_t total = 0;
  std::vector<UnalignedAnnotation> unaligned;

  void add(const AlignmentResult& result);
  // Sentence ids with at least one unaligned trigger.
  std::vector<std::string> sentences_with_unaligned_triggers() const;

  friend bool operator==(const AlignmentReport&,
                         const AlignmentReport&) = default;
};

struct TranslationOutput {
  Corpus corpus;
  AlignmentReport report;
};

// Translates every sentence and annotation. Sentences are processed by up
// to `jobs` threads; the bundle keeps input order. Client failures are
// collected and raised together as one AlignmentIOError naming the
// sentences involved.
TranslationBundle translate_sentences(const Corpus& corpus, MTClient& mt,
                                      const AlignmentConfig& config,
                                      size_t jobs = 1);

// Re-anchors every translated annotation. Mentions whose trigger cannot be
// anchored and arguments that cannot be anchored are left out of the
// corpus and listed in the report.
TranslationOutput align_bundle(const TranslationBundle& bundle,
                               const AlignmentClients& clients,
                               const AlignmentConfig& config,
                               size_t jobs = 1);

TranslationOutput translate_corpus(const Corpus& corpus,
                                   const AlignmentClients& clients,
                                   const AlignmentConfig& config,
                                   size_t jobs = 1);

std::string format_bundle_json(const TranslationBundle& bundle);
TranslationBundle parse_bundle_json(std::string_view json_text);
std::string format_report_json(const AlignmentReport& report);
AlignmentReport parse_report_json(std::string_view json_text);

}  // namespace ptevent

#endif  // PTEVENT_ALIGNMENT_H_
