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

#include <algorithm>
#include <vector>

#include "ptevent/unicode.h"

namespace ptevent {

size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single rolling row over the shorter string.
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(unicode::to_u32(a), unicode::to_u32(b));
}

double levenshtein_similarity(std::u32string_view a, std::u32string_view b) {
  const size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) /
                   static_cast<double>(longest);
}

namespace {

struct Match {
  size_t a = 0;
  size_t b = 0;
  size_t size = 0;
};

// Longest common substring by dynamic programming. Scanning `a` then `b`
// in increasing order and only replacing on a strictly longer match keeps
// the earliest-in-a, then earliest-in-b block.
Match longest_match(std::u32string_view a, std::u32string_view b) {
  Match best;
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      if (cur[j] > best.size) best = {i - cur[j], j - cur[j], cur[j]};
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace

size_t gestalt_matches(std::u32string_view a, std::u32string_view b) {
  if (a.empty() || b.empty()) return 0;
  const Match m = longest_match(a, b);
  if (m.size == 0) return 0;
  return m.size + gestalt_matches(a.substr(0, m.a), b.substr(0, m.b)) +
         gestalt_matches(a.substr(m.a + m.size), b.substr(m.b + m.size));
}

double gestalt_ratio(std::u32string_view a, std::u32string_view b) {
  const size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  return 2.0 * static_cast<double>(gestalt_matches(a, b)) /
         static_cast<double>(total);
}

double gestalt_ratio(std::string_view a, std::string_view b) {
  return gestalt_ratio(unicode::to_u32(a), unicode::to_u32(b));
}

}  // namespace ptevent
