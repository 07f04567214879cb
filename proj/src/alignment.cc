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

#include "ptevent/alignment.h"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/parallel.h"
#include "ptevent/string_similarity.h"
#include "ptevent/tokenizer.h"
#include "ptevent/unicode.h"

namespace ptevent {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, kStageCount> kStageNames = {
    "exact", "lemma", "dictionary", "aligner", "fuzzy"};

std::u32string folded(std::string_view text) {
  return unicode::fold_case(unicode::to_u32(unicode::nfc(text)));
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& token : tokens) out.push_back(token.surface);
  return out;
}

Span token_run_span(const Sentence& sentence, const std::u32string& text,
                    size_t first, size_t last) {
  return make_span(text, sentence.tokens[first].start,
                   sentence.tokens[last].end);
}

std::vector<std::string> folded_all(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& item : items) {
    out.push_back(unicode::fold_case(unicode::nfc(item)));
  }
  return out;
}

}  // namespace

std::string_view stage_name(Stage stage) {
  return kStageNames[static_cast<size_t>(stage)];
}

std::string_view status_name(AlignStatus status) {
  if (status == AlignStatus::kUnaligned) return "unaligned";
  return kStageNames[static_cast<size_t>(status)];
}

Stage parse_stage(std::string_view name) {
  for (size_t i = 0; i < kStageCount; ++i) {
    if (kStageNames[i] == name) return static_cast<Stage>(i);
  }
  throw ConfigError("unknown alignment stage '" + std::string(name) + "'");
}

std::vector<Stage> parse_stage_list(std::string_view list) {
  std::vector<Stage> stages;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) stages.push_back(parse_stage(item));
    pos = comma + 1;
  }
  std::sort(stages.begin(), stages.end());
  stages.erase(std::unique(stages.begin(), stages.end()), stages.end());
  return stages;
}

std::optional<Span> stage_exact(const Sentence& tgt_sentence,
                                std::string_view needle) {
  const std::u32string pattern = folded(needle);
  if (pattern.empty()) return std::nullopt;
  const std::u32string text = unicode::to_u32(tgt_sentence.text);
  const std::u32string haystack = unicode::fold_case(text);
  const auto& tokens = tgt_sentence.tokens;
  for (size_t pos = haystack.find(pattern); pos != std::u32string::npos;
       pos = haystack.find(pattern, pos + 1)) {
    const size_t end = pos + pattern.size();
    const bool starts = std::any_of(tokens.begin(), tokens.end(),
                                    [&](const Token& t) { return t.start == pos; });
    const bool ends = std::any_of(tokens.begin(), tokens.end(),
                                  [&](const Token& t) { return t.end == end; });
    if (starts && ends) return make_span(text, pos, end);
  }
  return std::nullopt;
}

std::optional<Span> stage_lemma_match(const Sentence& tgt_sentence,
                                      const std::vector<std::string>& ann_tokens,
                                      Lemmatizer& lemmatizer) {
  if (ann_tokens.empty() || tgt_sentence.tokens.empty()) return std::nullopt;
  const auto sentence_lemmas =
      folded_all(lemmatizer.lemmatize(surfaces(tgt_sentence.tokens)));
  const auto ann_lemmas = folded_all(lemmatizer.lemmatize(ann_tokens));
  if (sentence_lemmas.size() != tgt_sentence.tokens.size() ||
      ann_lemmas.size() != ann_tokens.size()) {
    throw AlignmentIOError("lemmatizer changed the token count");
  }
  if (ann_lemmas.size() > sentence_lemmas.size()) return std::nullopt;
  for (size_t i = 0; i + ann_lemmas.size() <= sentence_lemmas.size(); ++i) {
    if (std::equal(ann_lemmas.begin(), ann_lemmas.end(),
                   sentence_lemmas.begin() + static_cast<std::ptrdiff_t>(i))) {
      return token_run_span(tgt_sentence, unicode::to_u32(tgt_sentence.text),
                            i, i + ann_lemmas.size() - 1);
    }
  }
  return std::nullopt;
}

std::optional<Span> stage_word_aligner(
    const Sentence& src_sentence, const Sentence& tgt_sentence,
    std::pair<size_t, size_t> src_ann_token_range, WordAligner& aligner) {
  const auto [first, last] = src_ann_token_range;
  if (first > last || last >= src_sentence.tokens.size()) {
    throw OffsetError("annotation token range outside source sentence");
  }
  const AlignmentLinks links = aligner.align(surfaces(src_sentence.tokens),
                                             surfaces(tgt_sentence.tokens));
  std::optional<size_t> lo;
  std::optional<size_t> hi;
  for (const auto& [s, t] : links) {
    if (s < first || s > last) continue;
    if (t >= tgt_sentence.tokens.size()) {
      throw AlignmentIOError("word aligner link outside target sentence");
    }
    lo = lo ? std::min(*lo, t) : t;
    hi = hi ? std::max(*hi, t) : t;
  }
  if (!lo) return std::nullopt;
  return token_run_span(tgt_sentence, unicode::to_u32(tgt_sentence.text), *lo,
                        *hi);
}

std::optional<FuzzyMatch> stage_fuzzy(const Sentence& tgt_sentence,
                                      std::string_view ann_text,
                                      double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ConfigError("fuzzy threshold must lie in (0, 1]");
  }
  const std::u32string ann = folded(ann_text);
  const auto& tokens = tgt_sentence.tokens;
  if (ann.empty() || tokens.empty()) return std::nullopt;

  const size_t max_n = std::max<size_t>(1, tokenize(ann_text).size()) + 2;
  const std::u32string text = unicode::to_u32(tgt_sentence.text);
  const std::u32string folded_text = unicode::fold_case(text);

  double best_score = -1.0;
  size_t best_first = 0;
  size_t best_n = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (size_t n = 1; n <= max_n && i + n <= tokens.size(); ++n) {
      const size_t b = tokens[i].start;
      const size_t e = tokens[i + n - 1].end;
      const std::u32string_view candidate =
          std::u32string_view(folded_text).substr(b, e - b);
      const double score = std::max(levenshtein_similarity(candidate, ann),
                                    gestalt_ratio(candidate, ann));
      if (score > best_score || (score == best_score && n < best_n)) {
        best_score = score;
        best_first = i;
        best_n = n;
      }
    }
  }
  if (!(best_score > threshold)) return std::nullopt;
  return FuzzyMatch{
      token_run_span(tgt_sentence, text, best_first, best_first + best_n - 1),
      best_score};
}

AlignmentResult align_annotation(const Sentence& src_sentence,
                                 const Sentence& tgt_sentence,
                                 const Span& src_ann_span,
                                 const std::string& translated_ann_text,
                                 const AlignmentClients& clients,
                                 const AlignmentConfig& config) {
  AlignmentResult result;
  const std::string ann_text = unicode::nfc(translated_ann_text);
  auto ann_tokens = [&](const std::string& text) {
    return surfaces(tokenize(text));
  };
  auto found = [&](std::optional<Span> span, AlignStatus status) {
    if (!span) return false;
    result.span = std::move(span);
    result.status = status;
    result.score = 1.0;
    return true;
  };

  for (Stage stage : config.stages) {
    switch (stage) {
      case Stage::kExact:
        result.attempted.push_back(stage);
        if (found(stage_exact(tgt_sentence, ann_text), AlignStatus::kExact)) {
          return result;
        }
        break;
      case Stage::kLemma:
        if (clients.lemmatizer == nullptr) break;
        result.attempted.push_back(stage);
        if (found(stage_lemma_match(tgt_sentence, ann_tokens(ann_text),
                                    *clients.lemmatizer),
                  AlignStatus::kLemma)) {
          return result;
        }
        break;
      case Stage::kDictionary: {
        if (clients.dictionary == nullptr) break;
        result.attempted.push_back(stage);
        const auto alternatives = clients.dictionary->lookup_alternatives(
            src_ann_span.text, config.src_lang, config.tgt_lang);
        for (const std::string& alternative : alternatives) {
          if (found(stage_exact(tgt_sentence, alternative),
                    AlignStatus::kDictionary)) {
            return result;
          }
          if (clients.lemmatizer != nullptr &&
              found(stage_lemma_match(tgt_sentence, ann_tokens(alternative),
                                      *clients.lemmatizer),
                    AlignStatus::kDictionary)) {
            return result;
          }
        }
        break;
      }
      case Stage::kAligner:
        if (clients.aligner == nullptr) break;
        result.attempted.push_back(stage);
        if (found(stage_word_aligner(
                      src_sentence, tgt_sentence,
                      token_range(src_sentence.tokens, src_ann_span),
                      *clients.aligner),
                  AlignStatus::kAligner)) {
          return result;
        }
        break;
      case Stage::kFuzzy:
        result.attempted.push_back(stage);
        if (auto match = stage_fuzzy(tgt_sentence, ann_text,
                                     config.fuzzy_threshold)) {
          result.span = std::move(match->span);
          result.status = AlignStatus::kFuzzy;
          result.score = match->score;
          return result;
        }
        break;
    }
  }
  result.span.reset();
  result.status = AlignStatus::kUnaligned;
  result.score = 0.0;
  return result;
}

void AlignmentReport::add(const AlignmentResult& result) {
  ++total;
  for (Stage stage : result.attempted) {
    ++attempted[static_cast<size_t>(stage)];
  }
  if (result.status == AlignStatus::kUnaligned) {
    ++unaligned_count;
  } else {
    ++resolved[static_cast<size_t>(result.status)];
  }
}

std::vector<std::string> AlignmentReport::sentences_with_unaligned_triggers()
    const {
  std::vector<std::string> ids;
  for (const auto& entry : unaligned) {
    if (entry.kind == "trigger" &&
        std::find(ids.begin(), ids.end(), entry.sentence_id) == ids.end()) {
      ids.push_back(entry.sentence_id);
    }
  }
  return ids;
}

TranslationBundle translate_sentences(const Corpus& corpus, MTClient& mt,
                                      const AlignmentConfig& config,
                                      size_t jobs) {
  TranslationBundle bundle;
  bundle.src_lang = config.src_lang;
  bundle.tgt_lang = config.tgt_lang;
  bundle.sentences.resize(corpus.sentences.size());
  std::vector<std::string> failures(corpus.sentences.size());

  parallel_for(corpus.sentences.size(), jobs, [&](size_t i) {
    const Sentence& source = corpus.sentences[i];
    auto translate = [&](const std::string& text) {
      return unicode::nfc(mt.translate(text, config.src_lang, config.tgt_lang));
    };
    try {
      SentenceTranslation out;
      out.source = source;
      out.target_text = translate(source.text);
      for (const EventMention& mention : source.mentions) {
        out.trigger_translations.push_back(translate(mention.trigger.span.text));
        std::vector<std::string> args;
        for (const Argument& argument : mention.arguments) {
          args.push_back(translate(argument.span.text));
        }
        out.argument_translations.push_back(std::move(args));
      }
      bundle.sentences[i] = std::move(out);
    } catch (const AlignmentIOError& e) {
      failures[i] = "sentence '" + source.id + "': " + e.what();
    }
  });

  std::string message;
  size_t failed = 0;
  for (const std::string& failure : failures) {
    if (failure.empty()) continue;
    ++failed;
    message += "\n  " + failure;
  }
  if (failed > 0) {
    throw AlignmentIOError(std::to_string(failed) +
                           " sentence(s) failed to translate:" + message);
  }
  return bundle;
}

TranslationOutput align_bundle(const TranslationBundle& bundle,
                               const AlignmentClients& clients,
                               const AlignmentConfig& config, size_t jobs) {
  struct Outcome {
    AlignmentResult result;
    UnalignedAnnotation entry;
  };
  const size_t n = bundle.sentences.size();
  std::vector<Sentence> sentences(n);
  std::vector<std::vector<Outcome>> outcomes(n);
  std::vector<std::string> failures(n);

  parallel_for(n, jobs, [&](size_t i) {
    const SentenceTranslation& st = bundle.sentences[i];
    const Sentence& source = st.source;
    if (st.trigger_translations.size() != source.mentions.size() ||
        st.argument_translations.size() != source.mentions.size()) {
      throw FormatError("sentence '" + source.id +
                        "': translation bundle does not match its mentions");
    }
    Sentence target;
    target.id = source.id;
    target.doc_id = source.doc_id;
    target.text = unicode::nfc(st.target_text);
    target.tokens = tokenize(target.text);

    try {
      for (size_t m = 0; m < source.mentions.size(); ++m) {
        const EventMention& mention = source.mentions[m];
        AlignmentResult trigger = align_annotation(
            source, target, mention.trigger.span, st.trigger_translations[m],
            clients, config);
        const bool trigger_aligned = trigger.span.has_value();
        EventMention projected;
        projected.sentence_id = target.id;
        projected.trigger.event_type = mention.trigger.event_type;
        if (trigger_aligned) projected.trigger.span = *trigger.span;
        outcomes[i].push_back(
            {std::move(trigger),
             {source.id, mention.trigger.span.text, "trigger"}});

        const auto& args = st.argument_translations[m];
        if (args.size() != mention.arguments.size()) {
          throw FormatError("sentence '" + source.id +
                            "': argument translations do not match");
        }
        for (size_t a = 0; a < mention.arguments.size(); ++a) {
          const Argument& argument = mention.arguments[a];
          AlignmentResult result = align_annotation(
              source, target, argument.span, args[a], clients, config);
          if (result.span && trigger_aligned) {
            projected.arguments.push_back(Argument{*result.span, argument.role});
          }
          outcomes[i].push_back(
              {std::move(result), {source.id, argument.span.text, "argument"}});
        }
        if (trigger_aligned) target.mentions.push_back(std::move(projected));
      }
    } catch (const AlignmentIOError& e) {
      failures[i] = "sentence '" + source.id + "': " + e.what();
    }
    sentences[i] = std::move(target);
  });

  std::string message;
  size_t failed = 0;
  for (const std::string& failure : failures) {
    if (failure.empty()) continue;
    ++failed;
    message += "\n  " + failure;
  }
  if (failed > 0) {
    throw AlignmentIOError(std::to_string(failed) +
                           " sentence(s) failed to align:" + message);
  }

  TranslationOutput output;
  output.corpus.language = bundle.tgt_lang;
  output.corpus.sentences = std::move(sentences);
  for (const auto& per_sentence : outcomes) {
    for (const Outcome& outcome : per_sentence) {
      output.report.add(outcome.result);
      if (outcome.result.status == AlignStatus::kUnaligned) {
        output.report.unaligned.push_back(outcome.entry);
      }
    }
  }
  return output;
}

TranslationOutput translate_corpus(const Corpus& corpus,
                                   const AlignmentClients& clients,
                                   const AlignmentConfig& config,
                                   size_t jobs) {
  if (clients.mt == nullptr) throw ConfigError("no MT client configured");
  TranslationOutput output = align_bundle(
      translate_sentences(corpus, *clients.mt, config, jobs), clients, config,
      jobs);
  output.corpus.split = corpus.split;
  return output;
}

std::string format_bundle_json(const TranslationBundle& bundle) {
  ordered_json root;
  root["src_lang"] = bundle.src_lang;
  root["tgt_lang"] = bundle.tgt_lang;
  ordered_json sentences = ordered_json::array();
  for (const SentenceTranslation& st : bundle.sentences) {
    const Sentence& source = st.source;
    ordered_json js;
    js["id"] = source.id;
    if (!source.doc_id.empty()) js["doc_id"] = source.doc_id;
    js["source_sentence"] = source.text;
    ordered_json words = ordered_json::array();
    for (const Token& token : source.tokens) words.push_back(token.surface);
    js["source_words"] = std::move(words);
    js["target_sentence"] = st.target_text;
    ordered_json mentions = ordered_json::array();
    for (size_t m = 0; m < source.mentions.size(); ++m) {
      const EventMention& mention = source.mentions[m];
      const auto [tf, tl] = token_range(source.tokens, mention.trigger.span);
      ordered_json jm;
      jm["event_type"] = mention.trigger.event_type.label();
      jm["trigger"] = {{"text", mention.trigger.span.text},
                       {"start", tf},
                       {"end", tl + 1},
                       {"translation", st.trigger_translations.at(m)}};
      ordered_json args = ordered_json::array();
      for (size_t a = 0; a < mention.arguments.size(); ++a) {
        const Argument& argument = mention.arguments[a];
        const auto [af, al] = token_range(source.tokens, argument.span);
        args.push_back({{"text", argument.span.text},
                        {"start", af},
                        {"end", al + 1},
                        {"role", argument.role},
                        {"translation", st.argument_translations.at(m).at(a)}});
      }
      jm["arguments"] = std::move(args);
      mentions.push_back(std::move(jm));
    }
    js["mentions"] = std::move(mentions);
    sentences.push_back(std::move(js));
  }
  root["sentences"] = std::move(sentences);
  return root.dump(2) + "\n";
}

TranslationBundle parse_bundle_json(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
    TranslationBundle bundle;
    bundle.src_lang = root.at("src_lang").get<std::string>();
    bundle.tgt_lang = root.at("tgt_lang").get<std::string>();
    for (const json& js : root.at("sentences")) {
      SentenceTranslation st;
      Sentence& source = st.source;
      source.id = js.at("id").get<std::string>();
      source.doc_id = js.value("doc_id", "");
      source.text = unicode::nfc(js.at("source_sentence").get<std::string>());
      std::vector<std::string> words;
      for (const json& w : js.at("source_words")) {
        words.push_back(unicode::nfc(w.get<std::string>()));
      }
      source.tokens = locate_tokens(source.text, words);
      const std::u32string text = unicode::to_u32(source.text);
      auto span_of = [&](const json& j) {
        const auto b = j.at("start").get<size_t>();
        const auto e = j.at("end").get<size_t>();
        if (b >= e || e > source.tokens.size()) {
          throw OffsetError("sentence '" + source.id +
                            "': word range outside sentence");
        }
        return make_span(text, source.tokens[b].start,
                         source.tokens[e - 1].end);
      };
      st.target_text = unicode::nfc(js.at("target_sentence").get<std::string>());
      for (const json& jm : js.at("mentions")) {
        EventMention mention;
        mention.sentence_id = source.id;
        mention.trigger.event_type =
            EventType::parse(jm.at("event_type").get<std::string>());
        mention.trigger.span = span_of(jm.at("trigger"));
        st.trigger_translations.push_back(
            jm.at("trigger").at("translation").get<std::string>());
        std::vector<std::string> args;
        for (const json& ja : jm.at("arguments")) {
          mention.arguments.push_back(
              Argument{span_of(ja), ja.at("role").get<std::string>()});
          args.push_back(ja.at("translation").get<std::string>());
        }
        st.argument_translations.push_back(std::move(args));
        source.mentions.push_back(std::move(mention));
      }
      bundle.sentences.push_back(std::move(st));
    }
    return bundle;
  } catch (const json::exception& e) {
    throw FormatError(std::string("translation bundle: ") + e.what());
  }
}

std::string format_report_json(const AlignmentReport& report) {
  ordered_json root;
  ordered_json counts;
  for (size_t s = 0; s < kStageCount; ++s) {
    counts[std::string(kStageNames[s])] = {{"attempted", report.attempted[s]},
                                           {"resolved", report.resolved[s]}};
  }
  root["per_stage_counts"] = std::move(counts);
  root["total"] = report.total;
  root["unaligned_count"] = report.unaligned_count;
  ordered_json unaligned = ordered_json::array();
  for (const auto& entry : report.unaligned) {
    unaligned.push_back({{"sentence_id", entry.sentence_id},
                         {"annotation_text", entry.annotation_text},
                         {"kind", entry.kind}});
  }
  root["unaligned"] = std::move(unaligned);
  return root.dump(2) + "\n";
}

AlignmentReport parse_report_json(std::string_view json_text) {
  try {
    const json root = json::parse(json_text);
    AlignmentReport report;
    const json& counts = root.at("per_stage_counts");
    for (size_t s = 0; s < kStageCount; ++s) {
      const json& c = counts.at(std::string(kStageNames[s]));
      report.attempted[s] = c.at("attempted").get<size_t>();
      report.resolved[s] = c.at("resolved").get<size_t>();
    }
    report.total = root.at("total").get<size_t>();
    report.unaligned_count = root.at("unaligned_count").get<size_t>();
    for (const json& entry : root.at("unaligned")) {
      report.unaligned.push_back(
          {entry.at("sentence_id").get<std::string>(),
           entry.at("annotation_text").get<std::string>(),
           entry.at("kind").get<std::string>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw FormatError(std::string("alignment report: ") + e.what());
  }
}

}  // namespace ptevent
