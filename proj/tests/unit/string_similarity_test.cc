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

#include "ptevent/string_similarity.h"

#include <random>

#include <gtest/gtest.h>

#include "ptevent/unicode.h"
#include "support/oracles.h"

namespace ptevent {
namespace {

TEST(LevenshteinTest, KnownDistances) {
  EXPECT_EQ(levenshtein(std::string_view("kitten"), "sitting"), 3u);
  EXPECT_EQ(levenshtein(std::string_view(""), "abc"), 3u);
  EXPECT_EQ(levenshtein(std::string_view("abc"), "abc"), 0u);
  EXPECT_EQ(levenshtein(std::string_view("nós"), "no"), 2u);
  // Code points, not bytes.
  EXPECT_EQ(levenshtein(std::string_view("é"), "e"), 1u);
}

TEST(LevenshteinTest, MatchesDynamicProgrammingOracle) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 2000; ++n) {
    const auto a = oracle::random_string(rng, 12);
    const auto b = oracle::random_string(rng, 12);
    ASSERT_EQ(levenshtein(a, b), oracle::levenshtein(a, b))
        << unicode::to_utf8(a) << " / " << unicode::to_utf8(b);
  }
}

TEST(LevenshteinTest, SimilarityBounds) {
  EXPECT_DOUBLE_EQ(levenshtein_similarity(U"", U""), 1.0);
  EXPECT_DOUBLE_EQ(levenshtein_similarity(U"abc", U""), 0.0);
  EXPECT_DOUBLE_EQ(levenshtein_similarity(U"kitten", U"sitting"), 1.0 - 3.0 / 7.0);
}

// Values cross-checked against Python's difflib.SequenceMatcher with
// autojunk disabled.
TEST(GestaltTest, KnownRatios) {
  EXPECT_EQ(gestalt_matches(U"desembarcam", U"desembarcar"), 10u);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"desembarcam", U"desembarcar"), 20.0 / 22.0);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"nós", U"no"), 0.4);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"nós", U"discutimos"), 2.0 / 13.0);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"we", U"de"), 0.5);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"kitten", U"sitting"), 8.0 / 13.0);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"abcd", U"bcda"), 0.75);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"processo de paz", U"processo da paz"),
                   28.0 / 30.0);
  EXPECT_DOUBLE_EQ(gestalt_ratio(U"terra", U"desembarcam"), 0.375);
  EXPECT_DOUBLE_EQ(
      gestalt_ratio(std::string_view("ex-banqueiro sênior callum mccarthy"),
                    std::string_view("o ex-banqueiro sênior callum mccarthy")),
      70.0 / 72.0);
}

TEST(GestaltTest, BoundaryCases) {
  EXPECT_EQ(gestalt_ratio(U"", U""), 1.0);
  EXPECT_EQ(gestalt_ratio(U"abc", U""), 0.0);
  EXPECT_EQ(gestalt_ratio(U"abc", U"xyz"), 0.0);
  EXPECT_EQ(gestalt_ratio(U"abc", U"abc"), 1.0);
}

TEST(GestaltTest, MatchesRecursiveOracle) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    const auto a = oracle::random_string(rng, 14, U"abcáé");
    const auto b = oracle::random_string(rng, 14, U"abcáé");
    ASSERT_EQ(gestalt_matches(a, b), oracle::gestalt_matches(a, b))
        << unicode::to_utf8(a) << " / " << unicode::to_utf8(b);
  }
}

}  // namespace
}  // namespace ptevent
