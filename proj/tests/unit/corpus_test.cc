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

#include <gtest/gtest.h>

#include "ptevent/error.h"
#include "ptevent/ontology.h"
#include "ptevent/tokenizer.h"

namespace ptevent {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

Sentence make_sentence(std::string id, std::string doc_id, std::string text) {
  Sentence s;
  s.id = std::move(id);
  s.doc_id = std::move(doc_id);
  s.tokens = tokenize(text);
  s.text = std::move(text);
  return s;
}

TEST(TokenizerTest, SplitsEdgePunctuation) {
  const auto tokens = tokenize("Elvis morreu em 1977, Memphis (Tennessee).");
  EXPECT_EQ(surfaces(tokens),
            (std::vector<std::string>{"Elvis", "morreu", "em", "1977", ",",
                                      "Memphis", "(", "Tennessee", ")", "."}));
  EXPECT_EQ(tokens[3].start, 16u);
  EXPECT_EQ(tokens[3].end, 20u);
}

TEST(TokenizerTest, KeepsWordInternalPunctuation) {
  EXPECT_EQ(surfaces(tokenize("o ex-banqueiro d'água divorciou-se")),
            (std::vector<std::string>{"o", "ex-banqueiro", "d'água",
                                      "divorciou-se"}));
}

TEST(TokenizerTest, OffsetsAreCodePoints) {
  const auto tokens = tokenize("cardíaco ação");
  EXPECT_EQ(tokens[1].start, 9u);
  EXPECT_EQ(tokens[1].end, 13u);
}

TEST(TokenizerTest, LocateTokensSkipsOnlyWhitespace) {
  const auto tokens = locate_tokens("A  b,c", {"A", "b", ",", "c"});
  EXPECT_EQ(tokens[1].start, 3u);
  EXPECT_EQ(tokens[3].start, 5u);
  EXPECT_THROW(locate_tokens("A b", {"A", "c"}), OffsetError);
  EXPECT_THROW(locate_tokens("A xb", {"A", "b"}), OffsetError);
}

TEST(SpanTest, MakeSpanChecksOffsets) {
  const Span span = make_span("Elvis Presley morreu", 6, 13);
  EXPECT_EQ(span.text, "Presley");
  EXPECT_EQ(span.size(), 7u);
  EXPECT_THROW(make_span("abc", 1, 1), OffsetError);
  EXPECT_THROW(make_span("abc", 2, 4), OffsetError);
}

TEST(SpanTest, OverlapAndContainment) {
  const Span a{0, 5, "x"}, b{4, 8, "y"}, c{5, 8, "z"}, d{1, 3, "w"};
  EXPECT_TRUE(a.overlaps(b));
  EXPECT_FALSE(a.overlaps(c));
  EXPECT_TRUE(a.contains(d));
  EXPECT_FALSE(d.contains(a));
}

TEST(EventTypeTest, ParsesLabels) {
  const EventType t = EventType::parse("Business.Declare-Bankruptcy");
  EXPECT_EQ(t.type, "Business");
  EXPECT_EQ(t.subtype, "Declare-Bankruptcy");
  EXPECT_EQ(t.label(), "Business.Declare-Bankruptcy");
  EXPECT_THROW(EventType::parse("Attack"), UnknownEventType);
}

TEST(ValidationTest, AcceptsWellFormedSentence) {
  Sentence s = make_sentence("s", "d", "Elvis Presley morreu.");
  s.mentions.push_back(EventMention{
      Trigger{make_span(s.text, 14, 20), EventType::parse("Life.Die")},
      {Argument{make_span(s.text, 0, 13), "Victim"}},
      "s"});
  EXPECT_NO_THROW(validate_sentence(s, &EventOntology::bundled()));
}

TEST(ValidationTest, RejectsIllegalRoleAndType) {
  Sentence s = make_sentence("s", "d", "Elvis Presley morreu.");
  s.mentions.push_back(EventMention{
      Trigger{make_span(s.text, 14, 20), EventType::parse("Life.Die")},
      {Argument{make_span(s.text, 0, 13), "Buyer"}},
      "s"});
  EXPECT_THROW(validate_sentence(s, &EventOntology::bundled()),
               UnknownEventType);
  s.mentions[0].arguments.clear();
  s.mentions[0].trigger.event_type = EventType::parse("Life.Sing");
  EXPECT_THROW(validate_sentence(s, &EventOntology::bundled()),
               UnknownEventType);
}

TEST(ValidationTest, RejectsSurfaceMismatchAndNonNfc) {
  Sentence s = make_sentence("s", "d", "Elvis Presley morreu.");
  s.mentions.push_back(EventMention{
      Trigger{Span{14, 20, "morreram"}, EventType::parse("Life.Die")}, {},
      "s"});
  EXPECT_THROW(validate_sentence(s), OffsetError);

  Sentence decomposed = make_sentence("t", "d", "cardi\xCC\x81" "aco");
  EXPECT_THROW(validate_sentence(decomposed), FormatError);
}

TEST(ValidationTest, RejectsDuplicateIds) {
  Corpus corpus;
  corpus.sentences = {make_sentence("a", "d", "Um."),
                      make_sentence("a", "d", "Dois.")};
  EXPECT_THROW(validate_corpus(corpus), FormatError);
}

TEST(TokenRangeTest, FindsCoveringTokens) {
  const auto tokens = tokenize("Memphis, Tennessee.");
  EXPECT_EQ(token_range(tokens, Span{0, 18, ""}), std::make_pair(0ul, 2ul));
  EXPECT_THROW(token_range(tokens, Span{0, 4, ""}), SpanTokenMismatch);
}

class DocumentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_.sentences = {make_sentence("a0", "a", "Um."),
                         make_sentence("a1", "a", "Dois três."),
                         make_sentence("a2", "a", "Quatro."),
                         make_sentence("b0", "b", "Cinco."),
                         make_sentence("a3", "a", "Seis.")};
  }
  Corpus corpus_;
};

TEST_F(DocumentTest, GroupsAdjacentSentences) {
  const auto docs = group_documents(corpus_);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].doc_id, "a");
  EXPECT_EQ(docs[0].text, "Um. Dois três. Quatro.");
  EXPECT_EQ(docs[0].sentence_offsets, (std::vector<size_t>{0, 4, 15}));
  EXPECT_EQ(docs[1].sentence_indices, (std::vector<size_t>{3}));
  EXPECT_EQ(docs[2].sentence_indices, (std::vector<size_t>{4}));
}

TEST_F(DocumentTest, ContextWindowClipsAtDocumentEdges) {
  const auto docs = group_documents(corpus_);
  const ContextWindow k0 = make_context_window(docs[0], 1, 0);
  EXPECT_EQ(k0.text, "Dois três.");
  EXPECT_EQ(k0.doc_offset, 4u);
  EXPECT_EQ(k0.sentence_offset, 0u);

  const ContextWindow k1 = make_context_window(docs[0], 0, 1);
  EXPECT_EQ(k1.text, "Um. Dois três.");
  EXPECT_EQ(k1.first, 0u);
  EXPECT_EQ(k1.last, 1u);

  const ContextWindow k5 = make_context_window(docs[0], 2, 5);
  EXPECT_EQ(k5.text, docs[0].text);
  EXPECT_EQ(k5.sentence_offset, 15u);
}

}  // namespace
}  // namespace ptevent
