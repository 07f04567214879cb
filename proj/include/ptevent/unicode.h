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

#ifndef PTEVENT_UNICODE_H_
#define PTEVENT_UNICODE_H_

#include <string>
#include <string_view>

// UTF-8 helpers. All offsets exposed by ptevent count Unicode code points
// of NFC-normalized text.
namespace ptevent::unicode {

std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// Number of code points. Throws FormatError on malformed UTF-8.
size_t length(std::string_view utf8);

// Code point substring [start, end). Throws OffsetError when out of range.
std::string substr(std::string_view utf8, size_t start, size_t end);

std::string nfc(std::string_view utf8);
bool is_nfc(std::string_view utf8);

// Simple (1:1) case folding, so folded text keeps the offsets of the input.
std::u32string fold_case(std::u32string_view text);
std::string fold_case(std::string_view utf8);

bool is_space(char32_t c);
bool is_alnum(char32_t c);
bool is_punct(char32_t c);

}  // namespace ptevent::unicode

#endif  // PTEVENT_UNICODE_H_
