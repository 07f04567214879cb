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

#ifndef PTEVENT_INGESTION_H_
#define PTEVENT_INGESTION_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/corpus.h"
#include "ptevent/iob.h"

namespace ptevent {

class EventOntology;

// Preprocessed-ACE JSON: a list of sentence records
//   { "sentence", "words", "golden-event-mentions": [ { "trigger":
//     {"text","start","end"}, "event_type", "arguments": [ {"text","start",
//     "end","role"} ] } ] }
// with word-index spans (end exclusive). The optional "id" and "doc_id"
// keys are read and written when present.
//
// Text is NFC-normalized on ingest and word spans become code point spans.
// "Time-Within" style roles collapse to "Time".
Corpus parse_ace_json(std::string_view json_text, const EventOntology& ontology,
                      Split split = Split::kUnsplit,
                      std::string language = "pt");
Corpus read_ace_json(const std::filesystem::path& path,
                     const EventOntology& ontology,
                     Split split = Split::kUnsplit,
                     std::string language = "pt");

// Spans must coincide with token boundaries (SpanTokenMismatch otherwise).
std::string format_ace_json(const Corpus& corpus);
void write_ace_json(const Corpus& corpus, const std::filesystem::path& path);

struct LabeledSentence {
  std::vector<std::string> tokens;
  std::vector<IobTag> tags;

  friend bool operator==(const LabeledSentence&,
                         const LabeledSentence&) = default;
};

// `token<TAB>label` per token, a blank line between sentences. Sentences
// without tokens are not representable and are skipped.
std::string format_conll_iob(const Corpus& corpus,
                             const IobEncodeOptions& options = {});
void write_conll_iob(const Corpus& corpus, const std::filesystem::path& path,
                     const IobEncodeOptions& options = {});
std::vector<LabeledSentence> parse_conll_iob(std::string_view text);
std::vector<LabeledSentence> read_conll_iob(const std::filesystem::path& path);

struct Answer {
  std::string text;
  size_t answer_start = 0;  // code points into the context

  friend bool operator==(const Answer&, const Answer&) = default;
};

struct QAItem {
  std::string id;
  std::string question;
  std::string context;
  std::vector<Answer> answers;
  bool is_impossible = false;
  // SQuAD article title. Consecutive items sharing a title and a context are
  // written as one paragraph.
  std::string title;

  friend bool operator==(const QAItem&, const QAItem&) = default;
};

// Throws FormatError or OffsetError.
void validate_qa_item(const QAItem& item);

std::string format_squad_json(const std::vector<QAItem>& items);
void write_squad_json(const std::vector<QAItem>& items,
                      const std::filesystem::path& path);
std::vector<QAItem> parse_squad_json(std::string_view json_text);
std::vector<QAItem> read_squad_json(const std::filesystem::path& path);

struct CorpusStats {
  size_t sentences = 0;
  size_t mentions = 0;
  size_t triggers = 0;
  size_t arguments = 0;
  size_t distinct_trigger_surfaces = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace ptevent

#endif  // PTEVENT_INGESTION_H_
