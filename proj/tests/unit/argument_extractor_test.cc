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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ptevent/error.h"
#include "ptevent/ingestion.h"
#include "ptevent/iob.h"
#include "ptevent/ontology.h"
#include "ptevent/templates.h"
#include "ptevent/trigger_tagger.h"
#include "ptevent/unicode.h"
#include "support/test_data.h"

namespace ptevent {
namespace {

using testing::test_data;

const EventOntology& ontology() { return EventOntology::bundled(); }
const QuestionTemplateSet& templates() { return QuestionTemplateSet::bundled(); }

// Answers questions starting with `prefix` with the first token run whose
// text equals `answer`, and everything else with [CLS].
class ScriptedQABackend : public QABackend {
 public:
  ScriptedQABackend(std::string prefix, std::string answer)
      : prefix_(std::move(prefix)), answer_(std::move(answer)) {}
  SpanLogits predict(const QAInput& input) override {
    ++calls;
    if (input.question.rfind(prefix_, 0) == 0) {
      for (size_t i = input.context_begin; i < input.context_end; ++i) {
        for (size_t j = i; j < input.context_end; ++j) {
          if (unicode::substr(input.context, input.context_span(i).start,
                              input.context_span(j).end) == answer_) {
            return peaked_logits(input.sequence.size(), i, j);
          }
        }
      }
    }
    return peaked_logits(input.sequence.size(), 0, 0);
  }
  int calls = 0;

 private:
  std::string prefix_;
  std::string answer_;
};

class ThrowingQABackend : public QABackend {
 public:
  SpanLogits predict(const QAInput&) override {
    throw std::runtime_error("out of memory");
  }
};

TEST(AssembleInputTest, LaysOutSequence) {
  const QAInput input =
      assemble_input("Quem morre em morreu?", "Elvis morreu em 1977.");
  EXPECT_EQ(input.sequence,
            (std::vector<std::string>{"[CLS]", "Quem", "morre", "em", "morreu",
                                      "?", "[SEP]", "Elvis", "morreu", "em",
                                      "1977", ".", "[SEP]"}));
  EXPECT_EQ(input.question_begin, 1u);
  EXPECT_EQ(input.question_end, 6u);
  EXPECT_EQ(input.context_begin, 7u);
  EXPECT_EQ(input.context_end, 12u);
  EXPECT_EQ(input.context_span(10), (Span{16, 20, "1977"}));
  EXPECT_THROW(assemble_input("", "x"), FormatError);
  EXPECT_THROW(assemble_input("q", " "), FormatError);
}

TEST(ValidSpansTest, OrdersByScoreThenLengthThenPosition) {
  const QAInput input = assemble_input("Quem?", "a b c");
  SpanLogits flat{std::vector<double>(input.sequence.size(), 0.0),
                  std::vector<double>(input.sequence.size(), 0.0)};
  const auto spans = valid_spans(input, flat, 30);
  ASSERT_EQ(spans.size(), 6u);
  EXPECT_EQ(spans[0].char_span, (Span{0, 1, "a"}));
  EXPECT_EQ(spans[1].char_span, (Span{2, 3, "b"}));
  EXPECT_EQ(spans[3].char_span, (Span{0, 3, "a b"}));
  EXPECT_EQ(spans[5].char_span, (Span{0, 5, "a b c"}));

  const auto peaked = valid_spans(input, peaked_logits(input.sequence.size(), input.context_begin + 1,
                                           input.context_begin + 2),
                             30);
  EXPECT_EQ(peaked[0].char_span, (Span{2, 5, "b c"}));
  EXPECT_DOUBLE_EQ(peaked[0].score, 20.0);
}

TEST(ValidSpansTest, HonoursMaxAnswerTokens) {
  const QAInput input = assemble_input("Quem?", "a b c d");
  const auto logits = peaked_logits(input.sequence.size(), input.context_begin,
                                    input.context_end - 1);
  for (const auto& p : valid_spans(input, logits, 2)) {
    EXPECT_LE(p.end_token - p.start_token + 1, 2u);
  }
  EXPECT_TRUE(valid_spans(input, logits, 0).empty());
}

TEST(ValidSpansTest, RejectsBadLogits) {
  const QAInput input = assemble_input("Quem?", "a b");
  EXPECT_THROW(valid_spans(input, SpanLogits{{0.0}, {0.0}}, 30), ShapeMismatch);
  auto logits = peaked_logits(input.sequence.size(), 0, 0);
  logits.end[input.context_begin] = INFINITY;
  EXPECT_THROW(valid_spans(input, logits, 30), ShapeMismatch);
}

TEST(ValidSpansTest, FuzzedLogitsStayInsideContext) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> value(0.0, 3.0);
  std::uniform_int_distribution<size_t> max_tokens(1, 6);
  const QAInput input =
      assemble_input("Quando ocorre a morte em morreu?",
                     "Elvis Presley morreu de ataque cardíaco em 1977.");
  for (int n = 0; n < 300; ++n) {
    SpanLogits logits;
    for (size_t i = 0; i < input.sequence.size(); ++i) {
      logits.start.push_back(value(rng));
      logits.end.push_back(value(rng));
    }
    const size_t cap = max_tokens(rng);
    const auto spans = valid_spans(input, logits, cap);
    for (size_t k = 0; k < spans.size(); ++k) {
      const auto& p = spans[k];
      ASSERT_GE(p.start_token, input.context_begin);
      ASSERT_LT(p.end_token, input.context_end);
      ASSERT_LE(p.start_token, p.end_token);
      ASSERT_LE(p.end_token - p.start_token + 1, cap);
      if (k > 0) ASSERT_GE(spans[k - 1].score, p.score);
    }
  }
}

TEST(SelectAnswerTest, MarginRule) {
  const QAInput input = assemble_input("Quem?", "a b");
  SpanLogits logits = peaked_logits(input.sequence.size(), input.context_begin,
                                    input.context_begin, 2.0);
  logits.start[0] = 1.0;
  logits.end[0] = 1.0;  // null score 2, best 4
  const auto spans = valid_spans(input, logits, 30);
  EXPECT_EQ(select_answer(spans, logits, input, 0.0), (Span{0, 1, "a"}));
  EXPECT_EQ(select_answer(spans, logits, input, 2.0), (Span{0, 1, "a"}));
  EXPECT_EQ(select_answer(spans, logits, input, 2.5), std::nullopt);
  EXPECT_EQ(select_answer(spans, logits, input, INFINITY), std::nullopt);
  EXPECT_EQ(select_answer(spans, logits, input, -INFINITY), (Span{0, 1, "a"}));
  EXPECT_EQ(select_answer({}, logits, input, -INFINITY), std::nullopt);
}

TEST(SelectAnswerTest, ClsPeakIsImpossible) {
  const QAInput input = assemble_input("Quem?", "a b");
  const auto logits = peaked_logits(input.sequence.size(), 0, 0);
  EXPECT_EQ(select_answer(valid_spans(input, logits, 30), logits, input, 0.0),
            std::nullopt);
}

class CrossSentenceTest : public ::testing::Test {
 protected:
  CrossSentenceTest()
      : corpus_(read_ace_json(test_data("cross_sentence.json"), ontology())),
        inventory_(ontology()),
        triggers_(corpus_, inventory_),
        qa_("Quem morre", "Rui Lopes") {}

  std::vector<SentencePrediction> run(size_t k) {
    ExtractorConfig config;
    config.context_window = k;
    return run_extraction(corpus_, triggers_, qa_, config, inventory_,
                          templates(), ontology());
  }

  Corpus corpus_;
  LabelInventory inventory_;
  OracleTokenLabelBackend triggers_;
  ScriptedQABackend qa_;
};

TEST_F(CrossSentenceTest, WindowReachesNeighbourSentence) {
  const auto k0 = run(0);
  ASSERT_EQ(k0.size(), 2u);
  EXPECT_TRUE(k0[1].arguments.empty());
  EXPECT_EQ(qa_.calls, 5);

  const auto k1 = run(1);
  ASSERT_EQ(k1[1].arguments.size(), 1u);
  const PredictedArgument& victim = k1[1].arguments[0];
  EXPECT_EQ(victim.role, "Victim");
  EXPECT_EQ(victim.trigger_ref, 0u);
  EXPECT_EQ(victim.sentence_id, "cross-0");
  EXPECT_EQ(victim.span, (Span{10, 19, "Rui Lopes"}));
}

TEST_F(CrossSentenceTest, DropsSpansAcrossSentences) {
  ScriptedQABackend straddle("Quem morre", "patrulha. Ele");
  ExtractorConfig config;
  config.context_window = 1;
  const auto out = run_extraction(corpus_, triggers_, straddle, config,
                                  inventory_, templates(), ontology());
  EXPECT_TRUE(out[1].arguments.empty());
}

TEST_F(CrossSentenceTest, ExtractArgumentsIsDocumentAnchored) {
  const auto docs = group_documents(corpus_);
  ExtractorConfig config;
  const auto args = extract_arguments(corpus_.sentences[1].mentions[0].trigger,
                                      docs[0], 1, 1, qa_, config, templates(),
                                      ontology(), "cross-1");
  ASSERT_EQ(args.size(), 1u);
  EXPECT_EQ(args[0], (ExtractedArgument{"Victim", Span{10, 19, "Rui Lopes"}}));
}

TEST_F(CrossSentenceTest, BackendFailuresAreReported) {
  ThrowingQABackend broken;
  const auto docs = group_documents(corpus_);
  EXPECT_THROW(extract_arguments(corpus_.sentences[1].mentions[0].trigger,
                                 docs[0], 1, 0, broken, ExtractorConfig{},
                                 templates(), ontology(), "cross-1"),
               BackendError);
}

TEST(RunExtractionTest, OracleRecoversGoldAndJobsAgree) {
  const Corpus corpus = read_ace_json(test_data("synthetic.json"), ontology());
  const LabelInventory inventory(ontology());
  OracleTokenLabelBackend triggers(corpus, inventory);
  ExtractorConfig config;
  config.context_window = 1;
  OracleQABackend qa(generate_corpus_qa_items(corpus, 1, templates(), ontology()));
  const auto one = run_extraction(corpus, triggers, qa, config, inventory,
                                  templates(), ontology(), 1);
  const auto many = run_extraction(corpus, triggers, qa, config, inventory,
                                   templates(), ontology(), 6);
  EXPECT_EQ(format_predictions_json(one), format_predictions_json(many));

  for (size_t i = 0; i < corpus.sentences.size(); ++i) {
    const Sentence& s = corpus.sentences[i];
    size_t gold_args = 0;
    for (const auto& m : s.mentions) gold_args += m.arguments.size();
    EXPECT_EQ(one[i].triggers.size(), s.mentions.size());
    EXPECT_EQ(one[i].arguments.size(), gold_args) << s.id;
  }
}

TEST(PredictionJsonTest, RoundTrips) {
  const Corpus corpus = read_ace_json(test_data("synthetic.json"), ontology());
  const LabelInventory inventory(ontology());
  OracleTokenLabelBackend triggers(corpus, inventory);
  OracleQABackend qa(generate_corpus_qa_items(corpus, 0, templates(), ontology()));
  const auto predictions = run_extraction(corpus, triggers, qa, ExtractorConfig{},
                                          inventory, templates(), ontology());
  const std::string text = format_predictions_json(predictions);
  EXPECT_EQ(parse_predictions_json(text), predictions);
  EXPECT_THROW(parse_predictions_json("{}"), FormatError);
  EXPECT_THROW(parse_predictions_json(R"([{"id": "x", "triggers": [],
      "arguments": [{"trigger_ref": 0, "role": "Victim", "text": "a",
      "start": 0, "end": 1, "sentence_id": "x"}]}])"),
               FormatError);
}

}  // namespace
}  // namespace ptevent
