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

#ifndef PTEVENT_TEMPLATES_H_
#define PTEVENT_TEMPLATES_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptevent/corpus.h"
#include "ptevent/ingestion.h"

namespace ptevent {

class EventOntology;

// Portuguese argument questions keyed by (event label, role), stored
// without the trailing "?". Loaded from `templates.pt.json`:
//   { "Type.Subtype": { "Role": "question" } }
class QuestionTemplateSet {
 public:
  static QuestionTemplateSet load(const std::filesystem::path& path);
  static QuestionTemplateSet from_json_text(std::string_view json_text);

  // templates.pt.json from the data directory, checked for totality
  // against the bundled ontology.
  static const QuestionTemplateSet& bundled();

  // Throws MissingTemplate.
  const std::string& question_for(std::string_view event_label,
                                  std::string_view role) const;
  bool contains(std::string_view event_label, std::string_view role) const;
  size_t size() const { return questions_.size(); }

  // (label, role) pairs the ontology defines but the set lacks, and pairs
  // the set defines outside the ontology.
  std::vector<std::pair<std::string, std::string>> missing(
      const EventOntology& ontology) const;
  std::vector<std::pair<std::string, std::string>> extras(
      const EventOntology& ontology) const;

  // Throws FormatError unless the domain equals the ontology's.
  void check_total(const EventOntology& ontology) const;

 private:
  std::map<std::pair<std::string, std::string>, std::string, std::less<>>
      questions_;
};

// "<question> em <trigger>?". Throws FormatError for an empty trigger.
std::string contextualize(std::string_view question,
                          std::string_view trigger_text);

// One QA item per role of the mention's event type. Roles with gold
// arguments become answerable items listing every distinct gold span
// (rebased by `context_offset_base`, the offset of the mention's sentence
// inside `context_text`); the rest are impossible. Item ids are
// "<sentence_id>:<event_label>:<role>:<mention_index>".
std::vector<QAItem> generate_qa_items(const EventMention& mention,
                                      size_t mention_index,
                                      std::string_view context_text,
                                      size_t context_offset_base,
                                      const QuestionTemplateSet& templates,
                                      const EventOntology& ontology,
                                      std::string_view title = {});

// QA items for every mention in the corpus, with contexts built from a
// window of k sentences on each side.
std::vector<QAItem> generate_corpus_qa_items(
    const Corpus& corpus, size_t context_window,
    const QuestionTemplateSet& templates, const EventOntology& ontology);

}  // namespace ptevent

#endif  // PTEVENT_TEMPLATES_H_
