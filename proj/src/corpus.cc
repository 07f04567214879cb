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

#include "ptevent/corpus.h"

#include <algorithm>
#include <set>

#include "ptevent/error.h"
#include "ptevent/ontology.h"
#include "ptevent/unicode.h"

namespace ptevent {

Span make_span(std::u32string_view text, size_t start, size_t end) {
  if (!(start < end && end <= text.size())) {
    throw OffsetError("invalid span [" + std::to_string(start) + ", " +
                      std::to_string(end) + ") over text of length " +
                      std::to_string(text.size()));
  }
  return Span{start, end, unicode::to_utf8(text.substr(start, end - start))};
}

Span make_span(std::string_view text, size_t start, size_t end) {
  return make_span(unicode::to_u32(text), start, end);
}

void check_span(std::u32string_view text, const Span& span) {
  const Span expected = make_span(text, span.start, span.end);
  if (expected.text != span.text) {
    throw OffsetError("span [" + std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ") covers '" +
                      expected.text + "' but records '" + span.text + "'");
  }
}

EventType EventType::parse(std::string_view label) {
  const size_t dot = label.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == label.size()) {
    throw UnknownEventType("malformed event label '" + std::string(label) +
                           "'");
  }
  return EventType{std::string(label.substr(0, dot)),
                   std::string(label.substr(dot + 1))};
}

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
    case Split::kUnsplit: return "unsplit";
  }
  return "unsplit";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  if (name == "unsplit") return Split::kUnsplit;
  throw FormatError("unknown split '" + std::string(name) + "'");
}

void validate_sentence(const Sentence& sentence,
                       const EventOntology* ontology) {
  const std::string where = "sentence '" + sentence.id + "': ";
  if (!unicode::is_nfc(sentence.text)) {
    throw FormatError(where + "text is not NFC-normalized");
  }
  const std::u32string text = unicode::to_u32(sentence.text);

  // Tokens tile the non-whitespace text.
  size_t cursor = 0;
  for (const Token& token : sentence.tokens) {
    for (; cursor < token.start; ++cursor) {
      if (cursor >= text.size() || !unicode::is_space(text[cursor])) {
        throw OffsetError(where + "non-whitespace text between tokens at " +
                          std::to_string(cursor));
      }
    }
    if (token.start != cursor) {
      throw OffsetError(where + "token offsets not strictly increasing");
    }
    check_span(text, Span{token.start, token.end, token.surface});
    cursor = token.end;
  }
  for (; cursor < text.size(); ++cursor) {
    if (!unicode::is_space(text[cursor])) {
      throw OffsetError(where + "untokenized text at " +
                        std::to_string(cursor));
    }
  }

  for (const EventMention& mention : sentence.mentions) {
    check_span(text, mention.trigger.span);
    const std::string label = mention.trigger.event_type.label();
    if (ontology != nullptr && !ontology->contains(label)) {
      throw UnknownEventType(where + "unknown event type '" + label + "'");
    }
    for (const Argument& argument : mention.arguments) {
      check_span(text, argument.span);
      if (ontology != nullptr && !ontology->has_role(label, argument.role)) {
        throw UnknownEventType(where + "role '" + argument.role +
                               "' is not legal for " + label);
      }
    }
  }
}

void validate_corpus(const Corpus& corpus, const EventOntology* ontology) {
  std::set<std::string_view> ids;
  for (const Sentence& sentence : corpus.sentences) {
    if (!ids.insert(sentence.id).second) {
      throw FormatError("duplicate sentence id '" + sentence.id + "'");
    }
    validate_sentence(sentence, ontology);
  }
}

std::pair<size_t, size_t> token_range(const std::vector<Token>& tokens,
                                      const Span& span) {
  size_t first = tokens.size();
  size_t last = tokens.size();
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].start == span.start) first = i;
    if (tokens[i].end == span.end) last = i;
  }
  if (first == tokens.size() || last == tokens.size() || first > last) {
    throw SpanTokenMismatch("span '" + span.text + "' [" +
                            std::to_string(span.start) + ", " +
                            std::to_string(span.end) +
                            ") does not coincide with token boundaries");
  }
  return {first, last};
}

std::vector<DocumentView> group_documents(const Corpus& corpus) {
  std::vector<DocumentView> documents;
  for (size_t i = 0; i < corpus.sentences.size(); ++i) {
    const Sentence& sentence = corpus.sentences[i];
    if (documents.empty() || documents.back().doc_id != sentence.doc_id) {
      documents.push_back(DocumentView{sentence.doc_id, {}, {}, {}});
    }
    DocumentView& doc = documents.back();
    if (!doc.sentence_indices.empty()) doc.text.push_back(' ');
    doc.sentence_offsets.push_back(unicode::length(doc.text));
    doc.sentence_indices.push_back(i);
    doc.text += sentence.text;
  }
  return documents;
}

ContextWindow make_context_window(const DocumentView& doc, size_t position,
                                  size_t k) {
  const size_t count = doc.sentence_indices.size();
  if (position >= count) {
    throw OffsetError("sentence position outside document '" + doc.doc_id +
                      "'");
  }
  ContextWindow window;
  window.first = position >= k ? position - k : 0;
  window.last = std::min(count - 1, position + std::min(k, count));
  window.doc_offset = doc.sentence_offsets[window.first];
  window.sentence_offset = doc.sentence_offsets[position] - window.doc_offset;
  const std::u32string text = unicode::to_u32(doc.text);
  const size_t end = window.last + 1 < count
                         ? doc.sentence_offsets[window.last + 1] - 1
                         : text.size();
  window.text = unicode::to_utf8(
      std::u32string_view(text).substr(window.doc_offset,
                                       end - window.doc_offset));
  return window;
}

}  // namespace ptevent
