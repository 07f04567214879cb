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

#include "ptevent/ingestion.h"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/io.h"
#include "ptevent/ontology.h"
#include "ptevent/tokenizer.h"
#include "ptevent/unicode.h"

namespace ptevent {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, std::string_view where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(std::string(where) + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key,
                         std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) {
    throw FormatError(std::string(where) + ": field '" + key +
                      "' must be a string");
  }
  return v.get<std::string>();
}

size_t index_field(const json& obj, const char* key, std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string(where) + ": field '" + key +
                      "' must be a non-negative integer");
  }
  return v.get<size_t>();
}

std::string normalize_role(std::string role) {
  if (role.rfind("Time-", 0) == 0) return "Time";
  return role;
}

// Converts a word-index range to a code point span and checks the recorded
// surface. The recorded text may also be the words joined by single spaces.
Span word_span(const std::u32string& text, const std::vector<Token>& tokens,
               size_t start, size_t end, const std::string& recorded,
               const std::string& where) {
  if (start >= end || end > tokens.size()) {
    throw OffsetError(where + ": word range [" + std::to_string(start) +
                      ", " + std::to_string(end) + ") outside " +
                      std::to_string(tokens.size()) + " words");
  }
  Span span = make_span(text, tokens[start].start, tokens[end - 1].end);
  const std::string surface = unicode::nfc(recorded);
  if (surface == span.text) return span;
  std::string joined;
  for (size_t i = start; i < end; ++i) {
    if (i > start) joined.push_back(' ');
    joined += tokens[i].surface;
  }
  if (surface == joined) return span;
  throw OffsetError(where + ": recorded text '" + recorded +
                    "' does not match sentence text '" + span.text + "'");
}

}  // namespace

Corpus parse_ace_json(std::string_view json_text, const EventOntology& ontology,
                      Split split, std::string language) {
  const json doc = parse_json(json_text, "ACE JSON");
  if (!doc.is_array()) throw FormatError("ACE JSON: expected a list");

  Corpus corpus;
  corpus.split = split;
  corpus.language = std::move(language);
  corpus.sentences.reserve(doc.size());

  for (size_t r = 0; r < doc.size(); ++r) {
    const json& record = doc[r];
    std::string where = "record " + std::to_string(r);
    if (!record.is_object()) throw FormatError(where + ": expected an object");

    Sentence sentence;
    sentence.id = record.contains("id") ? string_field(record, "id", where)
                                        : "sent-" + std::to_string(r);
    if (record.contains("doc_id")) {
      sentence.doc_id = string_field(record, "doc_id", where);
    }
    where += " ('" + sentence.id + "')";
    sentence.text = unicode::nfc(string_field(record, "sentence", where));

    const json& words = field(record, "words", where);
    if (!words.is_array()) throw FormatError(where + ": 'words' not a list");
    std::vector<std::string> word_list;
    for (const json& w : words) {
      if (!w.is_string()) throw FormatError(where + ": non-string word");
      word_list.push_back(unicode::nfc(w.get<std::string>()));
    }
    try {
      sentence.tokens = locate_tokens(sentence.text, word_list);
    } catch (const OffsetError& e) {
      throw OffsetError(where + ": " + e.what());
    }
    const std::u32string text = unicode::to_u32(sentence.text);

    const json& mentions = field(record, "golden-event-mentions", where);
    if (!mentions.is_array()) {
      throw FormatError(where + ": 'golden-event-mentions' not a list");
    }
    for (size_t m = 0; m < mentions.size(); ++m) {
      const json& jm = mentions[m];
      const std::string mwhere = where + " mention " + std::to_string(m);
      const std::string label = string_field(jm, "event_type", mwhere);
      if (!ontology.contains(label)) {
        throw UnknownEventType(mwhere + ": unknown event type '" + label +
                               "'");
      }
      const json& jt = field(jm, "trigger", mwhere);
      EventMention mention;
      mention.sentence_id = sentence.id;
      mention.trigger.event_type = EventType::parse(label);
      mention.trigger.span = word_span(
          text, sentence.tokens, index_field(jt, "start", mwhere),
          index_field(jt, "end", mwhere), string_field(jt, "text", mwhere),
          mwhere + " trigger");

      if (jm.contains("arguments")) {
        const json& args = jm.at("arguments");
        if (!args.is_array()) throw FormatError(mwhere + ": bad 'arguments'");
        for (size_t a = 0; a < args.size(); ++a) {
          const std::string awhere = mwhere + " argument " + std::to_string(a);
          Argument argument;
          argument.role = normalize_role(string_field(args[a], "role", awhere));
          if (!ontology.has_role(label, argument.role)) {
            throw UnknownEventType(awhere + ": role '" + argument.role +
                                   "' is not legal for " + label);
          }
          argument.span = word_span(
              text, sentence.tokens, index_field(args[a], "start", awhere),
              index_field(args[a], "end", awhere),
              string_field(args[a], "text", awhere), awhere);
          mention.arguments.push_back(std::move(argument));
        }
      }
      sentence.mentions.push_back(std::move(mention));
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  validate_corpus(corpus, &ontology);
  return corpus;
}

Corpus read_ace_json(const std::filesystem::path& path,
                     const EventOntology& ontology, Split split,
                     std::string language) {
  return parse_ace_json(read_file(path), ontology, split, std::move(language));
}

std::string format_ace_json(const Corpus& corpus) {
  ordered_json records = ordered_json::array();
  for (const Sentence& sentence : corpus.sentences) {
    ordered_json record;
    record["id"] = sentence.id;
    if (!sentence.doc_id.empty()) record["doc_id"] = sentence.doc_id;
    record["sentence"] = sentence.text;
    ordered_json words = ordered_json::array();
    for (const Token& token : sentence.tokens) words.push_back(token.surface);
    record["words"] = std::move(words);

    ordered_json mentions = ordered_json::array();
    for (const EventMention& mention : sentence.mentions) {
      const auto [tf, tl] = token_range(sentence.tokens, mention.trigger.span);
      ordered_json jm;
      jm["trigger"] = {{"text", mention.trigger.span.text},
                       {"start", tf},
                       {"end", tl + 1}};
      jm["event_type"] = mention.trigger.event_type.label();
      ordered_json args = ordered_json::array();
      for (const Argument& argument : mention.arguments) {
        const auto [af, al] = token_range(sentence.tokens, argument.span);
        args.push_back({{"text", argument.span.text},
                        {"start", af},
                        {"end", al + 1},
                        {"role", argument.role}});
      }
      jm["arguments"] = std::move(args);
      mentions.push_back(std::move(jm));
    }
    record["golden-event-mentions"] = std::move(mentions);
    records.push_back(std::move(record));
  }
  return records.dump(2) + "\n";
}

void write_ace_json(const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, format_ace_json(corpus));
}

std::string format_conll_iob(const Corpus& corpus,
                             const IobEncodeOptions& options) {
  std::string out;
  bool first = true;
  for (const Sentence& sentence : corpus.sentences) {
    if (sentence.tokens.empty()) continue;
    const std::vector<IobTag> tags = iob_encode(sentence, options);
    if (!first) out.push_back('\n');
    first = false;
    for (size_t i = 0; i < tags.size(); ++i) {
      out += sentence.tokens[i].surface;
      out.push_back('\t');
      out += tags[i].str();
      out.push_back('\n');
    }
  }
  return out;
}

void write_conll_iob(const Corpus& corpus, const std::filesystem::path& path,
                     const IobEncodeOptions& options) {
  write_file(path, format_conll_iob(corpus, options));
}

std::vector<LabeledSentence> parse_conll_iob(std::string_view text) {
  std::vector<LabeledSentence> sentences;
  LabeledSentence current;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (!current.tokens.empty()) sentences.push_back(std::move(current));
      current = {};
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw FormatError("CoNLL line " + std::to_string(line_no) +
                        ": expected token<TAB>label");
    }
    current.tokens.emplace_back(line.substr(0, tab));
    try {
      current.tags.push_back(IobTag::parse(line.substr(tab + 1)));
    } catch (const FormatError& e) {
      throw FormatError("CoNLL line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::vector<LabeledSentence> read_conll_iob(
    const std::filesystem::path& path) {
  return parse_conll_iob(read_file(path));
}

void validate_qa_item(const QAItem& item) {
  const std::string where = "QA item '" + item.id + "'";
  if (item.is_impossible && !item.answers.empty()) {
    throw FormatError(where + ": impossible item carries answers");
  }
  if (!item.is_impossible && item.answers.empty()) {
    throw FormatError(where + ": answerable item without answers");
  }
  const std::u32string context = unicode::to_u32(item.context);
  for (const Answer& answer : item.answers) {
    const size_t len = unicode::length(answer.text);
    try {
      check_span(context, Span{answer.answer_start, answer.answer_start + len,
                               answer.text});
    } catch (const OffsetError& e) {
      throw OffsetError(where + ": " + e.what());
    }
  }
}

std::string format_squad_json(const std::vector<QAItem>& items) {
  ordered_json data = ordered_json::array();
  const QAItem* previous = nullptr;
  for (const QAItem& item : items) {
    validate_qa_item(item);
    if (previous == nullptr || previous->title != item.title) {
      ordered_json article;
      article["title"] = item.title;
      article["paragraphs"] = ordered_json::array();
      data.push_back(std::move(article));
    }
    ordered_json& paragraphs = data.back()["paragraphs"];
    if (previous == nullptr || previous->title != item.title ||
        previous->context != item.context) {
      ordered_json paragraph;
      paragraph["context"] = item.context;
      paragraph["qas"] = ordered_json::array();
      paragraphs.push_back(std::move(paragraph));
    }
    ordered_json qa;
    qa["id"] = item.id;
    qa["question"] = item.question;
    qa["is_impossible"] = item.is_impossible;
    ordered_json answers = ordered_json::array();
    for (const Answer& answer : item.answers) {
      answers.push_back(
          {{"text", answer.text}, {"answer_start", answer.answer_start}});
    }
    qa["answers"] = std::move(answers);
    paragraphs.back()["qas"].push_back(std::move(qa));
    previous = &item;
  }
  ordered_json root;
  root["version"] = "v2.0";
  root["data"] = std::move(data);
  return root.dump(2) + "\n";
}

void write_squad_json(const std::vector<QAItem>& items,
                      const std::filesystem::path& path) {
  write_file(path, format_squad_json(items));
}

std::vector<QAItem> parse_squad_json(std::string_view json_text) {
  const json root = parse_json(json_text, "SQuAD JSON");
  const json& data = field(root, "data", "SQuAD JSON");
  if (!data.is_array()) throw FormatError("SQuAD JSON: 'data' not a list");
  std::vector<QAItem> items;
  for (const json& article : data) {
    const std::string title = article.contains("title")
                                  ? string_field(article, "title", "article")
                                  : std::string();
    const json& paragraphs = field(article, "paragraphs", "article");
    if (!paragraphs.is_array()) throw FormatError("'paragraphs' not a list");
    for (const json& paragraph : paragraphs) {
      const std::string context =
          string_field(paragraph, "context", "paragraph");
      const json& qas = field(paragraph, "qas", "paragraph");
      if (!qas.is_array()) throw FormatError("'qas' not a list");
      for (const json& qa : qas) {
        QAItem item;
        item.title = title;
        item.context = context;
        item.id = string_field(qa, "id", "qa");
        item.question = string_field(qa, "question", "qa '" + item.id + "'");
        if (qa.contains("is_impossible")) {
          if (!qa.at("is_impossible").is_boolean()) {
            throw FormatError("qa '" + item.id + "': bad is_impossible");
          }
          item.is_impossible = qa.at("is_impossible").get<bool>();
        }
        const json& answers = field(qa, "answers", "qa '" + item.id + "'");
        if (!answers.is_array()) throw FormatError("'answers' not a list");
        for (const json& a : answers) {
          item.answers.push_back(
              Answer{string_field(a, "text", "answer"),
                     index_field(a, "answer_start", "answer")});
        }
        validate_qa_item(item);
        items.push_back(std::move(item));
      }
    }
  }
  return items;
}

std::vector<QAItem> read_squad_json(const std::filesystem::path& path) {
  return parse_squad_json(read_file(path));
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  std::set<std::string> surfaces;
  stats.sentences = corpus.sentences.size();
  for (const Sentence& sentence : corpus.sentences) {
    stats.mentions += sentence.mentions.size();
    for (const EventMention& mention : sentence.mentions) {
      ++stats.triggers;
      stats.arguments += mention.arguments.size();
      surfaces.insert(unicode::nfc(mention.trigger.span.text));
    }
  }
  stats.distinct_trigger_surfaces = surfaces.size();
  return stats;
}

}  // namespace ptevent
