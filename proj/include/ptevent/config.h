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

#ifndef PTEVENT_CONFIG_H_
#define PTEVENT_CONFIG_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/alignment.h"
#include "ptevent/argument_extractor.h"
#include "ptevent/clients.h"

namespace ptevent {

// One external client. Kinds:
//   mt:          identity | http | replay | none
//   dictionary:  empty | replay | none
//   aligner:     diagonal | replay | none
//   lemmatizer:  table | replay | none
// "replay" serves responses from `cache` only. Any other kind with a
// `cache` path records its responses there.
struct ClientConfig {
  std::string kind;
  std::string endpoint;
  std::filesystem::path cache;
  std::filesystem::path table;

  friend bool operator==(const ClientConfig&, const ClientConfig&) = default;
};

struct Config {
  std::string src_lang = "en";
  std::string tgt_lang = "pt";
  std::vector<Stage> stages = AlignmentConfig{}.stages;
  double fuzzy_threshold = 0.5;
  size_t context_window = 0;
  double null_threshold = 0.0;
  size_t max_answer_tokens = 30;
  size_t jobs = 1;
  ClientConfig mt{"identity", "", "", ""};
  ClientConfig dictionary{"none", "", "", ""};
  ClientConfig aligner{"none", "", "", ""};
  ClientConfig lemmatizer{"table", "", "", ""};
  // Empty means the bundled data files.
  std::filesystem::path ontology;
  std::filesystem::path templates;

  AlignmentConfig alignment() const;
  ExtractorConfig extractor() const;
  void validate() const;  // ConfigError
};

// Unknown keys and ill-typed values raise ConfigError. Relative paths are
// resolved against `base_dir`.
Config parse_config(std::string_view json_text,
                    const std::filesystem::path& base_dir = {});
Config load_config(const std::filesystem::path& path);

// Every field except `jobs`, with sorted keys. Equal configs give equal
// text.
std::string canonical_config_json(const Config& config);

// Clients built from a config, owning their caches.
class ClientSet {
 public:
  explicit ClientSet(const Config& config);

  AlignmentClients view() const;
  MTClient* mt() const { return mt_.get(); }
  // Writes back caches that recorded new responses.
  void save() const;
  // Cache files that exist on disk, for provenance.
  std::vector<std::filesystem::path> cache_files() const;

 private:
  std::shared_ptr<MTClient> mt_;
  std::shared_ptr<DictionaryClient> dictionary_;
  std::shared_ptr<WordAligner> aligner_;
  std::shared_ptr<Lemmatizer> lemmatizer_;
  std::vector<std::shared_ptr<ResponseCache>> caches_;
  std::vector<std::filesystem::path> cache_paths_;
};

}  // namespace ptevent

#endif  // PTEVENT_CONFIG_H_
