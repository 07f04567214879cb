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

#include "ptevent/clients.h"

#include <httplib.h>

#include <algorithm>

#include "ptevent/error.h"
#include "ptevent/hashing.h"
#include "ptevent/io.h"
#include "ptevent/unicode.h"

namespace ptevent {

using json = nlohmann::json;

namespace {

constexpr char kFieldSeparator = '\x1f';
constexpr char kTokenSeparator = '\x1e';

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(kTokenSeparator);
    out += tokens[i];
  }
  return out;
}

template <typename T, typename Fetch>
T cached_call(ResponseCache& cache, const std::string& key,
              const std::string& what, bool has_inner, Fetch fetch) {
  if (auto hit = cache.get(key)) {
    try {
      return hit->get<T>();
    } catch (const json::exception& e) {
      throw AlignmentIOError("corrupt cache entry for " + what + ": " +
                             e.what());
    }
  }
  if (!has_inner) {
    throw AlignmentIOError("no recorded response for " + what +
                           " (replay-only client)");
  }
  T value;
  try {
    value = fetch();
  } catch (const AlignmentIOError&) {
    throw;
  } catch (const std::exception& e) {
    throw AlignmentIOError(what + ": " + e.what());
  }
  cache.put(key, json(value));
  return value;
}

}  // namespace

std::string cache_key(const std::string& operation, const std::string& text,
                      const std::string& src_lang,
                      const std::string& tgt_lang) {
  std::string material = operation;
  for (const std::string* part : {&text, &src_lang, &tgt_lang}) {
    material.push_back(kFieldSeparator);
    material += *part;
  }
  return sha256_hex(material);
}

std::string mt_cache_key(const std::string& text, const std::string& src_lang,
                         const std::string& tgt_lang) {
  return cache_key("translate", text, src_lang, tgt_lang);
}

std::string dictionary_cache_key(const std::string& text,
                                 const std::string& src_lang,
                                 const std::string& tgt_lang) {
  return cache_key("lookup", text, src_lang, tgt_lang);
}

std::string aligner_cache_key(const std::vector<std::string>& src_tokens,
                              const std::vector<std::string>& tgt_tokens) {
  return cache_key("align", join_tokens(src_tokens) + kFieldSeparator +
                                join_tokens(tgt_tokens),
                   "", "");
}

std::string lemmatizer_cache_key(const std::vector<std::string>& tokens,
                                 const std::string& lang) {
  return cache_key("lemmatize", join_tokens(tokens), lang, "");
}

ResponseCache::ResponseCache(std::filesystem::path path)
    : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  json doc;
  try {
    doc = json::parse(read_file(path_));
  } catch (const json::parse_error& e) {
    throw AlignmentIOError("cache " + path_.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw AlignmentIOError("cache " + path_.string() + ": expected object");
  }
  for (auto& [key, value] : doc.items()) entries_.emplace(key, value);
}

std::optional<json> ResponseCache::get(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return std::optional<json>(std::in_place, it->second);
}

void ResponseCache::put(const std::string& key, json value) {
  std::lock_guard lock(mu_);
  entries_[key] = std::move(value);
  dirty_ = true;
}

void ResponseCache::save() const {
  std::lock_guard lock(mu_);
  if (path_.empty() || !dirty_) return;
  json doc = json::object();
  for (const auto& [key, value] : entries_) doc[key] = value;
  write_file(path_, doc.dump(2) + "\n");
}

size_t ResponseCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

size_t ResponseCache::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

size_t ResponseCache::misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

CachedMTClient::CachedMTClient(std::shared_ptr<MTClient> inner,
                               std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

std::string CachedMTClient::translate(const std::string& text,
                                      const std::string& src_lang,
                                      const std::string& tgt_lang) {
  return cached_call<std::string>(
      *cache_, mt_cache_key(text, src_lang, tgt_lang),
      "translate '" + text + "' (" + src_lang + "->" + tgt_lang + ")",
      inner_ != nullptr,
      [&] { return inner_->translate(text, src_lang, tgt_lang); });
}

CachedDictionaryClient::CachedDictionaryClient(
    std::shared_ptr<DictionaryClient> inner,
    std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

std::vector<std::string> CachedDictionaryClient::lookup_alternatives(
    const std::string& text, const std::string& src_lang,
    const std::string& tgt_lang) {
  return cached_call<std::vector<std::string>>(
      *cache_, dictionary_cache_key(text, src_lang, tgt_lang),
      "dictionary lookup '" + text + "'", inner_ != nullptr,
      [&] { return inner_->lookup_alternatives(text, src_lang, tgt_lang); });
}

CachedWordAligner::CachedWordAligner(std::shared_ptr<WordAligner> inner,
                                     std::shared_ptr<ResponseCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

AlignmentLinks CachedWordAligner::align(
    const std::vector<std::string>& src_tokens,
    const std::vector<std::string>& tgt_tokens) {
  AlignmentLinks links = cached_call<AlignmentLinks>(
      *cache_, aligner_cache_key(src_tokens, tgt_tokens),
      "word alignment of '" + join_tokens(src_tokens) + "'",
      inner_ != nullptr, [&] { return inner_->align(src_tokens, tgt_tokens); });
  for (const auto& [s, t] : links) {
    if (s >= src_tokens.size() || t >= tgt_tokens.size()) {
      throw AlignmentIOError("word aligner returned out-of-range link (" +
                             std::to_string(s) + ", " + std::to_string(t) +
                             ")");
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return links;
}

CachedLemmatizer::CachedLemmatizer(std::shared_ptr<Lemmatizer> inner,
                                   std::shared_ptr<ResponseCache> cache,
                                   std::string lang)
    : inner_(std::move(inner)),
      cache_(std::move(cache)),
      lang_(std::move(lang)) {}

std::vector<std::string> CachedLemmatizer::lemmatize(
    const std::vector<std::string>& tokens) {
  auto lemmas = cached_call<std::vector<std::string>>(
      *cache_, lemmatizer_cache_key(tokens, lang_),
      "lemmatization of '" + join_tokens(tokens) + "'", inner_ != nullptr,
      [&] { return inner_->lemmatize(tokens); });
  if (lemmas.size() != tokens.size()) {
    throw AlignmentIOError("lemmatizer returned " +
                           std::to_string(lemmas.size()) + " lemmas for " +
                           std::to_string(tokens.size()) + " tokens");
  }
  return lemmas;
}

AlignmentLinks DiagonalAligner::align(
    const std::vector<std::string>& src_tokens,
    const std::vector<std::string>& tgt_tokens) {
  AlignmentLinks links;
  const size_t n = std::min(src_tokens.size(), tgt_tokens.size());
  for (size_t i = 0; i < n; ++i) links.emplace_back(i, i);
  return links;
}

TableLemmatizer TableLemmatizer::load(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError("lemma table " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw FormatError("lemma table " + path.string() + ": expected object");
  }
  std::map<std::string, std::string> table;
  for (auto& [surface, lemma] : doc.items()) {
    if (!lemma.is_string()) {
      throw FormatError("lemma table: non-string lemma for " + surface);
    }
    table.emplace(unicode::fold_case(unicode::nfc(surface)),
                  unicode::fold_case(unicode::nfc(lemma.get<std::string>())));
  }
  return TableLemmatizer(std::move(table));
}

std::vector<std::string> TableLemmatizer::lemmatize(
    const std::vector<std::string>& tokens) {
  std::vector<std::string> lemmas;
  lemmas.reserve(tokens.size());
  for (const std::string& token : tokens) {
    std::string folded = unicode::fold_case(unicode::nfc(token));
    auto it = table_.find(folded);
    lemmas.push_back(it == table_.end() ? std::move(folded) : it->second);
  }
  return lemmas;
}

HttpMTClient::HttpMTClient(std::string base_url, int timeout_seconds)
    : base_url_(std::move(base_url)), timeout_seconds_(timeout_seconds) {}

std::string HttpMTClient::translate(const std::string& text,
                                    const std::string& src_lang,
                                    const std::string& tgt_lang) {
  httplib::Client client(base_url_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  const json request = {
      {"q", text}, {"source", src_lang}, {"target", tgt_lang},
      {"format", "text"}};
  auto response =
      client.Post("/translate", request.dump(), "application/json");
  if (!response) {
    throw AlignmentIOError("MT endpoint " + base_url_ + ": " +
                           httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw AlignmentIOError("MT endpoint " + base_url_ + " returned HTTP " +
                           std::to_string(response->status));
  }
  try {
    return json::parse(response->body).at("translatedText").get<std::string>();
  } catch (const json::exception& e) {
    throw AlignmentIOError("MT endpoint " + base_url_ +
                           ": malformed response: " + e.what());
  }
}

}  // namespace ptevent
