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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/io.h"
#include "ptevent/ontology.h"
#include "support/test_data.h"

namespace ptevent {
namespace {

using testing::test_data;

const EventOntology& ontology() { return EventOntology::bundled(); }

TEST(AceJsonTest, ReadsElvisFixture) {
  const Corpus corpus = read_ace_json(test_data("elvis.json"), ontology());
  ASSERT_EQ(corpus.sentences.size(), 1u);
  const Sentence& s = corpus.sentences[0];
  EXPECT_EQ(s.id, "elvis-0");
  EXPECT_EQ(s.doc_id, "elvis");
  EXPECT_EQ(s.tokens.size(), 13u);
  ASSERT_EQ(s.mentions.size(), 1u);
  const EventMention& m = s.mentions[0];
  EXPECT_EQ(m.trigger.span, (Span{14, 20, "morreu"}));
  EXPECT_EQ(m.trigger.event_type.label(), "Life.Die");
  EXPECT_EQ(m.sentence_id, "elvis-0");
  ASSERT_EQ(m.arguments.size(), 3u);
  EXPECT_EQ(m.arguments[0], (Argument{Span{0, 13, "Elvis Presley"}, "Victim"}));
  EXPECT_EQ(m.arguments[1], (Argument{Span{40, 47, "em 1977"}, "Time"}));
  EXPECT_EQ(m.arguments[2],
            (Argument{Span{49, 67, "Memphis, Tennessee"}, "Place"}));
}

TEST(AceJsonTest, AcceptsSpaceJoinedRecordedText) {
  const std::string text = R"([{"sentence": "Em 1977, Memphis.",
    "words": ["Em", "1977", ",", "Memphis", "."],
    "golden-event-mentions": [{"trigger": {"text": "Memphis", "start": 3, "end": 4},
      "event_type": "Life.Die",
      "arguments": [{"text": "1977 , Memphis", "start": 1, "end": 4, "role": "Place"}]}]}])";
  const Corpus corpus = parse_ace_json(text, ontology());
  EXPECT_EQ(corpus.sentences[0].id, "sent-0");
  EXPECT_EQ(corpus.sentences[0].mentions[0].arguments[0].span.text,
            "1977, Memphis");
}

TEST(AceJsonTest, RejectsBadInput) {
  EXPECT_THROW(parse_ace_json("{", ontology()), FormatError);
  EXPECT_THROW(parse_ace_json("{}", ontology()), FormatError);
  EXPECT_THROW(parse_ace_json(R"([{"sentence": "a b"}])", ontology()),
               FormatError);
  EXPECT_THROW(parse_ace_json(R"([{"sentence": "a b", "words": ["a", "c"],
                 "golden-event-mentions": []}])",
                              ontology()),
               OffsetError);
  EXPECT_THROW(
      parse_ace_json(R"([{"sentence": "a b", "words": ["a", "b"],
        "golden-event-mentions": [{"trigger": {"text": "b", "start": 1, "end": 2},
        "event_type": "Life.Sing", "arguments": []}]}])",
                     ontology()),
      UnknownEventType);
  EXPECT_THROW(
      parse_ace_json(R"([{"sentence": "a b", "words": ["a", "b"],
        "golden-event-mentions": [{"trigger": {"text": "a", "start": 1, "end": 2},
        "event_type": "Life.Die", "arguments": []}]}])",
                     ontology()),
      OffsetError);
  EXPECT_THROW(
      parse_ace_json(R"([{"sentence": "a b", "words": ["a", "b"],
        "golden-event-mentions": [{"trigger": {"text": "b", "start": 1, "end": 3},
        "event_type": "Life.Die", "arguments": []}]}])",
                     ontology()),
      OffsetError);
}

TEST(AceJsonTest, NormalizesToNfc) {
  const std::string text =
      "[{\"sentence\": \"cardi\xCC\x81" "aco\", \"words\": [\"cardi\xCC\x81"
      "aco\"], \"golden-event-mentions\": []}]";
  const Corpus corpus = parse_ace_json(text, ontology());
  EXPECT_EQ(corpus.sentences[0].text, "cardíaco");
}

TEST(AceJsonTest, RoundTrips) {
  const Corpus corpus = read_ace_json(test_data("synthetic.json"), ontology());
  const std::string once = format_ace_json(corpus);
  const Corpus again = parse_ace_json(once, ontology());
  EXPECT_EQ(again, corpus);
  EXPECT_EQ(format_ace_json(again), once);
}

TEST(ConllTest, MatchesGoldenFile) {
  const Corpus corpus = read_ace_json(test_data("elvis.json"), ontology());
  EXPECT_EQ(format_conll_iob(corpus), read_file(test_data("elvis.conll")));
}

TEST(ConllTest, RoundTrips) {
  const Corpus corpus = read_ace_json(test_data("synthetic.json"), ontology());
  const std::string text = format_conll_iob(corpus);
  const auto parsed = parse_conll_iob(text);
  ASSERT_EQ(parsed.size(), corpus.sentences.size());
  EXPECT_EQ(parsed[12].tokens[3], "entrou");
  EXPECT_EQ(parsed[12].tags[3].str(), "B-Business.Declare-Bankruptcy");
  EXPECT_EQ(parsed[12].tags[5].str(), "I-Business.Declare-Bankruptcy");

  std::string rewritten;
  for (const LabeledSentence& s : parsed) {
    if (!rewritten.empty()) rewritten += "\n";
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      rewritten += s.tokens[i] + "\t" + s.tags[i].str() + "\n";
    }
  }
  EXPECT_EQ(rewritten, text);
}

TEST(ConllTest, RejectsMalformedLines) {
  EXPECT_THROW(parse_conll_iob("word\n"), FormatError);
  EXPECT_THROW(parse_conll_iob("word\tX-Life.Die\n"), FormatError);
}

std::vector<QAItem> sample_items() {
  const std::string context = "Elvis Presley morreu em 1977.";
  return {
      QAItem{"q0", "Quem morre em morreu?", context,
             {Answer{"Elvis Presley", 0}}, false, "elvis"},
      QAItem{"q1", "Quem é o assassino em morreu?", context, {}, true, "elvis"},
      QAItem{"q2", "Quando ocorre a morte em morreu?", "Outro contexto em 1977.",
             {Answer{"em 1977", 15}}, false, "elvis"},
  };
}

TEST(SquadTest, RoundTripsBitExactly) {
  const auto items = sample_items();
  const std::string text = format_squad_json(items);
  EXPECT_EQ(parse_squad_json(text), items);
  EXPECT_EQ(format_squad_json(parse_squad_json(text)), text);
}

TEST(SquadTest, GroupsParagraphs) {
  const std::string text = format_squad_json(sample_items());
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["version"], "v2.0");
  ASSERT_EQ(doc["data"].size(), 1u);
  EXPECT_EQ(doc["data"][0]["paragraphs"].size(), 2u);
  EXPECT_EQ(doc["data"][0]["paragraphs"][0]["qas"].size(), 2u);
}

TEST(SquadTest, ValidatesItems) {
  QAItem item = sample_items()[0];
  item.is_impossible = true;
  EXPECT_THROW(validate_qa_item(item), FormatError);
  item = sample_items()[1];
  item.is_impossible = false;
  EXPECT_THROW(validate_qa_item(item), FormatError);
  item = sample_items()[0];
  item.answers[0].answer_start = 1;
  EXPECT_THROW(validate_qa_item(item), OffsetError);
}

TEST(StatsTest, CountsSyntheticCorpus) {
  const Corpus corpus = read_ace_json(test_data("synthetic.json"), ontology());
  const CorpusStats stats = corpus_stats(corpus);
  EXPECT_EQ(stats.sentences, 20u);
  EXPECT_EQ(stats.mentions, 20u);
  EXPECT_EQ(stats.triggers, 20u);
  EXPECT_EQ(stats.arguments, 47u);
  EXPECT_EQ(stats.distinct_trigger_surfaces, 19u);
}

}  // namespace
}  // namespace ptevent
