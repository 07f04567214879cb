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

#include "ptevent/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "ptevent/error.h"

namespace ptevent::unicode {

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  int32_t i = 0;
  const auto n = static_cast<int32_t>(utf8.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(s, i, n, c);
    if (c < 0) throw FormatError("malformed UTF-8 input");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[4];
    int32_t len = 0;
    UBool error = false;
    U8_APPEND(buf, len, 4, static_cast<UChar32>(c), error);
    if (error) throw FormatError("invalid code point");
    out.append(reinterpret_cast<const char*>(buf), len);
  }
  return out;
}

size_t length(std::string_view utf8) { return to_u32(utf8).size(); }

std::string substr(std::string_view utf8, size_t start, size_t end) {
  const std::u32string text = to_u32(utf8);
  if (start > end || end > text.size()) {
    throw OffsetError("span [" + std::to_string(start) + ", " +
                      std::to_string(end) + ") outside text of length " +
                      std::to_string(text.size()));
  }
  return to_utf8(std::u32string_view(text).substr(start, end - start));
}

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw IOError("ICU NFC normalizer unavailable");
  }
  return *n;
}

}  // namespace

std::string nfc(std::string_view utf8) {
  to_u32(utf8);  // validate
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString out = nfc_instance().normalize(in, status);
  if (U_FAILURE(status)) throw FormatError("NFC normalization failed");
  std::string result;
  out.toUTF8String(result);
  return result;
}

bool is_nfc(std::string_view utf8) { return nfc(utf8) == utf8; }

std::u32string fold_case(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) {
    c = static_cast<char32_t>(
        u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  }
  return out;
}

std::string fold_case(std::string_view utf8) {
  return to_utf8(fold_case(to_u32(utf8)));
}

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_alnum(char32_t c) {
  return u_isalnum(static_cast<UChar32>(c)) ||
         u_hasBinaryProperty(static_cast<UChar32>(c), UCHAR_ALPHABETIC);
}

bool is_punct(char32_t c) {
  return !is_space(c) && !is_alnum(c) &&
         !u_hasBinaryProperty(static_cast<UChar32>(c), UCHAR_DIACRITIC);
}

}  // namespace ptevent::unicode
