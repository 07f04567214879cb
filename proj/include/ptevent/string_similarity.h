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

#ifndef PTEVENT_STRING_SIMILARITY_H_
#define PTEVENT_STRING_SIMILARITY_H_

#include <string_view>

// Character-level similarity measures over code points.
namespace ptevent {

// Unit-cost edit distance (insert, delete, substitute).
size_t levenshtein(std::u32string_view a, std::u32string_view b);
size_t levenshtein(std::string_view a, std::string_view b);

// 1 - d / max(|a|, |b|); 1.0 for two empty strings.
double levenshtein_similarity(std::u32string_view a, std::u32string_view b);

// Ratcliff-Obershelp "gestalt" similarity 2M / (|a| + |b|), where M counts
// the characters matched by taking the longest common substring and
// recursing on both sides of it. Among equally long common substrings the
// one starting earliest in `a`, then earliest in `b`, is taken. Two empty
// strings score 1.0.
double gestalt_ratio(std::u32string_view a, std::u32string_view b);
double gestalt_ratio(std::string_view a, std::string_view b);

// Matched character count M of the gestalt ratio.
size_t gestalt_matches(std::u32string_view a, std::u32string_view b);

}  // namespace ptevent

#endif  // PTEVENT_STRING_SIMILARITY_H_
