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

#ifndef PTEVENT_TOKENIZER_H_
#define PTEVENT_TOKENIZER_H_

#include <string_view>
#include <vector>

#include "ptevent/corpus.h"

namespace ptevent {

// Whitespace tokenizer that also splits leading and trailing punctuation
// off each chunk ("1977," -> "1977" ","). Word-internal punctuation stays
// ("ex-banqueiro", "d'água"). Offsets are code points.
std::vector<Token> tokenize(std::string_view text);

// Locates `words` in order inside `text`, skipping only whitespace between
// them. Throws OffsetError when a word is not found where expected.
std::vector<Token> locate_tokens(std::string_view text,
                                 const std::vector<std::string>& words);

}  // namespace ptevent

#endif  // PTEVENT_TOKENIZER_H_
