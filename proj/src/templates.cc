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

#include "ptevent/templates.h"

#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/io.h"
#include "ptevent/ontology.h"
#include "ptevent/unicode.h"

namespace ptevent {

using json = nlohmann::json;

QuestionTemplateSet QuestionTemplateSet::from_json_text(
    std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("templates: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("templates: expected an object");
  QuestionTemplateSet set;
  for (const auto& [label, roles] : doc.items()) {
    if (!roles.is_object()) {
      throw FormatError("templates: entry for " + label +
                        " must be an object");
    }
    for (const auto& [role, question] : roles.items()) {
      if (!question.is_string() || question.get<std::string>().empty()) {
        throw FormatError("templates: bad question for " + label + "/" + role);
      }
      std::string text = unicode::nfc(question.get<std::string>());
      if (text.back() == '?') {
        throw FormatError("templates: question for " + label + "/" + role +
                          " must not end with '?'");
      }
      set.questions_.emplace(std::make_pair(label, role), std::move(text));
    }
  }
  return set;
}

QuestionTemplateSet QuestionTemplateSet::load(
    const std::filesystem::path& path) {
  return from_json_text(read_file(path));
}

const QuestionTemplateSet& QuestionTemplateSet::bundled() {
  static const QuestionTemplateSet set = [] {
    QuestionTemplateSet s = load(data_dir() / "templates.pt.json");
    s.check_total(EventOntology::bundled());
    return s;
  }();
  return set;
}

const std::string& QuestionTemplateSet::question_for(
    std::string_view event_label, std::string_view role) const {
  auto it = questions_.find(std::make_pair(std::string(event_label),
                                           std::string(role)));
  if (it == questions_.end()) {
    throw MissingTemplate("no question template for " +
                          std::string(event_label) + "/" + std::string(role));
  }
  return it->second;
}

bool QuestionTemplateSet::contains(std::string_view event_label,
                                   std::string_view role) const {
  return questions_.count(
             std::make_pair(std::string(event_label), std::string(role))) > 0;
}

std::vector<std::pair<std::string, std::string>> QuestionTemplateSet::missing(
    const EventOntology& ontology) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& label : ontology.labels()) {
    for (const std::string& role : ontology.role_set(label)) {
      if (!contains(label, role)) out.emplace_back(label, role);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> QuestionTemplateSet::extras(
    const EventOntology& ontology) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, question] : questions_) {
    if (!ontology.has_role(key.first, key.second)) out.push_back(key);
  }
  return out;
}

void QuestionTemplateSet::check_total(const EventOntology& ontology) const {
  const auto absent = missing(ontology);
  const auto extra = extras(ontology);
  if (absent.empty() && extra.empty()) return;
  std::string message = "question templates do not match the ontology:";
  for (const auto& [label, role] : absent) {
    message += " missing " + label + "/" + role + ";";
  }
  for (const auto& [label, role] : extra) {
    message += " extra " + label + "/" + role + ";";
  }
  throw FormatError(message);
}

std::string contextualize(std::string_view question,
                          std::string_view trigger_text) {
  if (trigger_text.empty()) throw FormatError("empty trigger text");
  while (!question.empty() &&
         (question.back() == '?' || question.back() == ' ')) {
    question.remove_suffix(1);
  }
  std::string out(question);
  out += " em ";
  out += trigger_text;
  out += "?";
  return out;
}

std::vector<QAItem> generate_qa_items(const EventMention& mention,
                                      size_t mention_index,
                                      std::string_view context_text,
                                      size_t context_offset_base,
                                      const QuestionTemplateSet& templates,
                                      const EventOntology& ontology,
                                      std::string_view title) {
  const std::string label = mention.trigger.event_type.label();
  std::vector<QAItem> items;
  for (const std::string& role : ontology.role_set(label)) {
    QAItem item;
    item.id = mention.sentence_id + ":" + label + ":" + role + ":" +
              std::to_string(mention_index);
    item.question = contextualize(templates.question_for(label, role),
                                  mention.trigger.span.text);
    item.context = std::string(context_text);
    item.title = std::string(title);
    for (const Argument& argument : mention.arguments) {
      if (argument.role != role) continue;
      Answer answer{argument.span.text,
                    argument.span.start + context_offset_base};
      bool seen = false;
      for (const Answer& a : item.answers) seen |= a == answer;
      if (!seen) item.answers.push_back(std::move(answer));
    }
    item.is_impossible = item.answers.empty();
    validate_qa_item(item);
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<QAItem> generate_corpus_qa_items(
    const Corpus& corpus, size_t context_window,
    const QuestionTemplateSet& templates, const EventOntology& ontology) {
  std::vector<QAItem> items;
  for (const DocumentView& doc : group_documents(corpus)) {
    for (size_t pos = 0; pos < doc.sentence_indices.size(); ++pos) {
      const Sentence& sentence = corpus.sentences[doc.sentence_indices[pos]];
      if (sentence.mentions.empty()) continue;
      const ContextWindow window =
          make_context_window(doc, pos, context_window);
      const std::string title = doc.doc_id.empty() ? sentence.id : doc.doc_id;
      for (size_t m = 0; m < sentence.mentions.size(); ++m) {
        auto mention_items = generate_qa_items(
            sentence.mentions[m], m, window.text, window.sentence_offset,
            templates, ontology, title);
        for (auto& item : mention_items) items.push_back(std::move(item));
      }
    }
  }
  return items;
}

}  // namespace ptevent
