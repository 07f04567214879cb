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

#ifndef PTEVENT_CLIENTS_H_
#define PTEVENT_CLIENTS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ptevent {

// External services used by the translation pipeline. Implementations
// report transport failures as AlignmentIOError.

class MTClient {
 public:
  virtual ~MTClient() = default;
  virtual std::string translate(const std::string& text,
                                const std::string& src_lang,
                                const std::string& tgt_lang) = 0;
};

class DictionaryClient {
 public:
  virtual ~DictionaryClient() = default;
  // May be empty.
  virtual std::vector<std::string> lookup_alternatives(
      const std::string& text, const std::string& src_lang,
      const std::string& tgt_lang) = 0;
};

using AlignmentLinks = std::vector<std::pair<size_t, size_t>>;

class WordAligner {
 public:
  virtual ~WordAligner() = default;
  // Sorted, duplicate-free (src_index, tgt_index) links.
  virtual AlignmentLinks align(const std::vector<std::string>& src_tokens,
                               const std::vector<std::string>& tgt_tokens) = 0;
};

class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  // One lemma per token.
  virtual std::vector<std::string> lemmatize(
      const std::vector<std::string>& tokens) = 0;
};

// Cache key: SHA-256 over the operation name and request fields.
std::string cache_key(const std::string& operation, const std::string& text,
                      const std::string& src_lang,
                      const std::string& tgt_lang);

// A JSON object file mapping cache keys to recorded responses. Reads and
// writes are serialized; `save` writes keys in sorted order so that replays
// produce byte-identical files.
class ResponseCache {
 public:
  ResponseCache() = default;  // in-memory only
  explicit ResponseCache(std::filesystem::path path);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, nlohmann::json value);
  void save() const;

  size_t size() const;
  size_t hits() const;
  size_t misses() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, nlohmann::json> entries_;
  mutable size_t hits_ = 0;
  mutable size_t misses_ = 0;
  bool dirty_ = false;
};

// Caching decorators. With a null `inner` the client is replay-only and a
// cache miss raises AlignmentIOError.
class CachedMTClient : public MTClient {
 public:
  CachedMTClient(std::shared_ptr<MTClient> inner,
                 std::shared_ptr<ResponseCache> cache);
  std::string translate(const std::string& text, const std::string& src_lang,
                        const std::string& tgt_lang) override;

 private:
  std::shared_ptr<MTClient> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachedDictionaryClient : public DictionaryClient {
 public:
  CachedDictionaryClient(std::shared_ptr<DictionaryClient> inner,
                         std::shared_ptr<ResponseCache> cache);
  std::vector<std::string> lookup_alternatives(
      const std::string& text, const std::string& src_lang,
      const std::string& tgt_lang) override;

 private:
  std::shared_ptr<DictionaryClient> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachedWordAligner : public WordAligner {
 public:
  CachedWordAligner(std::shared_ptr<WordAligner> inner,
                    std::shared_ptr<ResponseCache> cache);
  AlignmentLinks align(const std::vector<std::string>& src_tokens,
                       const std::vector<std::string>& tgt_tokens) override;

 private:
  std::shared_ptr<WordAligner> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachedLemmatizer : public Lemmatizer {
 public:
  CachedLemmatizer(std::shared_ptr<Lemmatizer> inner,
                   std::shared_ptr<ResponseCache> cache, std::string lang);
  std::vector<std::string> lemmatize(
      const std::vector<std::string>& tokens) override;

 private:
  std::shared_ptr<Lemmatizer> inner_;
  std::shared_ptr<ResponseCache> cache_;
  std::string lang_;
};

// Cache keys used by the decorators, exposed for fixture recording.
std::string mt_cache_key(const std::string& text, const std::string& src_lang,
                         const std::string& tgt_lang);
std::string dictionary_cache_key(const std::string& text,
                                 const std::string& src_lang,
                                 const std::string& tgt_lang);
std::string aligner_cache_key(const std::vector<std::string>& src_tokens,
                              const std::vector<std::string>& tgt_tokens);
std::string lemmatizer_cache_key(const std::vector<std::string>& tokens,
                                 const std::string& lang);

// Deterministic stand-ins.

class IdentityMTClient : public MTClient {
 public:
  std::string translate(const std::string& text, const std::string&,
                        const std::string&) override {
    return text;
  }
};

class EmptyDictionaryClient : public DictionaryClient {
 public:
  std::vector<std::string> lookup_alternatives(const std::string&,
                                               const std::string&,
                                               const std::string&) override {
    return {};
  }
};

// Links token i to token i.
class DiagonalAligner : public WordAligner {
 public:
  AlignmentLinks align(const std::vector<std::string>& src_tokens,
                       const std::vector<std::string>& tgt_tokens) override;
};

// Case-folded surface as lemma, unless the table lists the folded surface.
class TableLemmatizer : public Lemmatizer {
 public:
  TableLemmatizer() = default;
  explicit TableLemmatizer(std::map<std::string, std::string> table)
      : table_(std::move(table)) {}
  // JSON object { "surface": "lemma" }.
  static TableLemmatizer load(const std::filesystem::path& path);

  std::vector<std::string> lemmatize(
      const std::vector<std::string>& tokens) override;

 private:
  std::map<std::string, std::string> table_;
};

// LibreTranslate-compatible HTTP endpoint: POST {q, source, target,
// format: "text"} to <base>/translate, reading "translatedText".
class HttpMTClient : public MTClient {
 public:
  explicit HttpMTClient(std::string base_url, int timeout_seconds = 30);
  std::string translate(const std::string& text, const std::string& src_lang,
                        const std::string& tgt_lang) override;

 private:
  std::string base_url_;
  int timeout_seconds_;
};

}  // namespace ptevent

#endif  // PTEVENT_CLIENTS_H_
