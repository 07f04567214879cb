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

#ifndef PTEVENT_CORPUS_H_
#define PTEVENT_CORPUS_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ptevent {

class EventOntology;

// Half-open code point range [start, end) into its owning text, plus the
// surface string it covers.
struct Span {
  size_t start = 0;
  size_t end = 0;
  std::string text;

  size_t size() const { return end - start; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Builds a span over `text`, checking the offsets. Throws OffsetError.
Span make_span(std::string_view text, size_t start, size_t end);
Span make_span(std::u32string_view text, size_t start, size_t end);

// Throws OffsetError unless 0 <= start < end <= len(text) and the stored
// surface equals the covered substring.
void check_span(std::u32string_view text, const Span& span);

struct EventType {
  std::string type;
  std::string subtype;

  // "Type.Subtype"
  std::string label() const { return type + "." + subtype; }

  // Splits on the first '.'; throws UnknownEventType if there is none.
  static EventType parse(std::string_view label);

  friend bool operator==(const EventType&, const EventType&) = default;
  friend auto operator<=>(const EventType&, const EventType&) = default;
};

struct Trigger {
  Span span;
  EventType event_type;

  friend bool operator==(const Trigger&, const Trigger&) = default;
  friend auto operator<=>(const Trigger&, const Trigger&) = default;
};

struct Argument {
  Span span;
  std::string role;

  friend bool operator==(const Argument&, const Argument&) = default;
};

struct EventMention {
  Trigger trigger;
  std::vector<Argument> arguments;
  std::string sentence_id;

  friend bool operator==(const EventMention&, const EventMention&) = default;
};

struct Token {
  std::string surface;
  size_t start = 0;
  size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string id;
  // Sentences sharing a doc_id and adjacent in the corpus form a document.
  std::string doc_id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<EventMention> mentions;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class Split { kTrain, kDev, kTest, kUnsplit };

std::string_view split_name(Split split);
Split parse_split(std::string_view name);

struct Corpus {
  Split split = Split::kUnsplit;
  std::string language = "pt";
  std::vector<Sentence> sentences;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Checks every Sentence invariant: NFC text, tokens tiling the
// non-whitespace text, span/substring equality, and (when `ontology` is
// given) legal event types and roles. Throws the matching error type.
void validate_sentence(const Sentence& sentence,
                       const EventOntology* ontology = nullptr);

// Adds corpus-level checks (unique sentence ids) on top of
// validate_sentence.
void validate_corpus(const Corpus& corpus,
                     const EventOntology* ontology = nullptr);

// Smallest token index range [first, last] exactly covering `span`, or
// SpanTokenMismatch when the span boundaries fall inside tokens.
std::pair<size_t, size_t> token_range(const std::vector<Token>& tokens,
                                      const Span& span);

// A run of adjacent sentences sharing a doc_id, joined with single spaces.
struct DocumentView {
  std::string doc_id;
  std::vector<size_t> sentence_indices;  // into Corpus::sentences
  std::vector<size_t> sentence_offsets;  // code point offset of each sentence
  std::string text;
};

std::vector<DocumentView> group_documents(const Corpus& corpus);

// Sentences [i - k, i + k] of a document (clipped at its ends), joined with
// single spaces. Offsets are code points.
struct ContextWindow {
  std::string text;
  size_t doc_offset = 0;       // start of `text` in the document text
  size_t sentence_offset = 0;  // start of sentence i within `text`
  size_t first = 0;            // window bounds, positions within the document
  size_t last = 0;
};

// `position` indexes DocumentView::sentence_indices.
ContextWindow make_context_window(const DocumentView& doc, size_t position,
                                  size_t k);

}  // namespace ptevent

#endif  // PTEVENT_CORPUS_H_
