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

#include "ptevent/tokenizer.h"

#include "ptevent/error.h"
#include "ptevent/unicode.h"

namespace ptevent {

namespace {

void push(std::vector<Token>& out, std::u32string_view text, size_t b,
          size_t e) {
  out.push_back(Token{unicode::to_utf8(text.substr(b, e - b)), b, e});
}

}  // namespace

std::vector<Token> tokenize(std::string_view utf8) {
  const std::u32string text = unicode::to_u32(utf8);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (unicode::is_space(text[i])) {
      ++i;
      continue;
    }
    size_t chunk_end = i;
    while (chunk_end < text.size() && !unicode::is_space(text[chunk_end])) {
      ++chunk_end;
    }
    size_t b = i;
    size_t e = chunk_end;
    while (b < e && unicode::is_punct(text[b])) {
      push(tokens, text, b, b + 1);
      ++b;
    }
    size_t trail = e;
    while (trail > b && unicode::is_punct(text[trail - 1])) --trail;
    if (b < trail) push(tokens, text, b, trail);
    for (size_t p = trail; p < e; ++p) push(tokens, text, p, p + 1);
    i = chunk_end;
  }
  return tokens;
}

std::vector<Token> locate_tokens(std::string_view utf8,
                                 const std::vector<std::string>& words) {
  const std::u32string text = unicode::to_u32(utf8);
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  size_t cursor = 0;
  for (size_t w = 0; w < words.size(); ++w) {
    const std::u32string word = unicode::to_u32(words[w]);
    while (cursor < text.size() && unicode::is_space(text[cursor])) ++cursor;
    if (word.empty() || text.compare(cursor, word.size(), word) != 0) {
      throw OffsetError("word " + std::to_string(w) + " '" + words[w] +
                        "' not found at offset " + std::to_string(cursor));
    }
    tokens.push_back(Token{words[w], cursor, cursor + word.size()});
    cursor += word.size();
  }
  for (; cursor < text.size(); ++cursor) {
    if (!unicode::is_space(text[cursor])) {
      throw OffsetError("text after last word at offset " +
                        std::to_string(cursor));
    }
  }
  return tokens;
}

}  // namespace ptevent
