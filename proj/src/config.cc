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

#include "ptevent/config.h"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "ptevent/error.h"
#include "ptevent/io.h"

namespace ptevent {

using nlohmann::json;

AlignmentConfig Config::alignment() const {
  AlignmentConfig out;
  out.stages = stages;
  out.fuzzy_threshold = fuzzy_threshold;
  out.src_lang = src_lang;
  out.tgt_lang = tgt_lang;
  return out;
}

ExtractorConfig Config::extractor() const {
  ExtractorConfig out;
  out.max_answer_tokens = max_answer_tokens;
  out.null_threshold = null_threshold;
  out.context_window = context_window;
  return out;
}

namespace {

const std::set<std::string>& kinds_for(std::string_view client) {
  static const std::set<std::string> mt = {"identity", "http", "replay",
                                           "none"};
  static const std::set<std::string> dictionary = {"empty", "replay", "none"};
  static const std::set<std::string> aligner = {"diagonal", "replay", "none"};
  static const std::set<std::string> lemmatizer = {"table", "replay", "none"};
  if (client == "mt") return mt;
  if (client == "dictionary") return dictionary;
  if (client == "aligner") return aligner;
  return lemmatizer;
}

void validate_client(std::string_view name, const ClientConfig& client) {
  if (!kinds_for(name).contains(client.kind)) {
    throw ConfigError("config: unknown " + std::string(name) + " kind '" +
                      client.kind + "'");
  }
  if (client.kind == "replay" && client.cache.empty()) {
    throw ConfigError("config: " + std::string(name) +
                      " replay needs a cache path");
  }
  if (client.kind == "http" && client.endpoint.empty()) {
    throw ConfigError("config: " + std::string(name) +
                      " http needs an endpoint");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

template <typename T>
T get_as(const json& value, std::string_view key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config: bad value for '" + std::string(key) + "'");
  }
}

size_t get_count(const json& value, std::string_view key) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ConfigError("config: '" + std::string(key) +
                      "' must be a non-negative integer");
  }
  return value.get<size_t>();
}

ClientConfig parse_client(const json& value, std::string_view name,
                          const ClientConfig& defaults,
                          const std::filesystem::path& base) {
  if (!value.is_object()) {
    throw ConfigError("config: '" + std::string(name) + "' must be an object");
  }
  ClientConfig out = defaults;
  for (const auto& [key, field] : value.items()) {
    const std::string where = std::string(name) + "." + key;
    if (key == "kind") {
      out.kind = get_as<std::string>(field, where);
    } else if (key == "endpoint") {
      out.endpoint = get_as<std::string>(field, where);
    } else if (key == "cache") {
      out.cache = resolve(base, get_as<std::string>(field, where));
    } else if (key == "table") {
      out.table = resolve(base, get_as<std::string>(field, where));
    } else {
      throw ConfigError("config: unknown key '" + where + "'");
    }
  }
  return out;
}

json client_json(const ClientConfig& client) {
  return {{"kind", client.kind},
          {"endpoint", client.endpoint},
          {"cache", client.cache.string()},
          {"table", client.table.string()}};
}

}  // namespace

void Config::validate() const {
  if (src_lang.empty() || tgt_lang.empty()) {
    throw ConfigError("config: language codes must be non-empty");
  }
  if (!(fuzzy_threshold > 0.0 && fuzzy_threshold <= 1.0)) {
    throw ConfigError("config: fuzzy_threshold must lie in (0, 1]");
  }
  if (std::isnan(null_threshold)) {
    throw ConfigError("config: null_threshold must be a number");
  }
  if (max_answer_tokens == 0) {
    throw ConfigError("config: max_answer_tokens must be positive");
  }
  if (jobs == 0) throw ConfigError("config: jobs must be positive");
  validate_client("mt", mt);
  validate_client("dictionary", dictionary);
  validate_client("aligner", aligner);
  validate_client("lemmatizer", lemmatizer);
}

Config parse_config(std::string_view json_text,
                    const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: expected an object");

  Config config;
  for (const auto& [key, value] : root.items()) {
    if (key == "src_lang") {
      config.src_lang = get_as<std::string>(value, key);
    } else if (key == "tgt_lang") {
      config.tgt_lang = get_as<std::string>(value, key);
    } else if (key == "stages") {
      std::string list;
      for (const auto& stage : get_as<std::vector<std::string>>(value, key)) {
        list += stage + ",";
      }
      try {
        config.stages = parse_stage_list(list);
      } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
      }
    } else if (key == "fuzzy_threshold") {
      config.fuzzy_threshold = get_as<double>(value, key);
    } else if (key == "context_window") {
      config.context_window = get_count(value, key);
    } else if (key == "null_threshold") {
      config.null_threshold = get_as<double>(value, key);
    } else if (key == "max_answer_tokens") {
      config.max_answer_tokens = get_count(value, key);
    } else if (key == "jobs") {
      config.jobs = get_count(value, key);
    } else if (key == "mt") {
      config.mt = parse_client(value, key, config.mt, base_dir);
    } else if (key == "dictionary") {
      config.dictionary = parse_client(value, key, config.dictionary, base_dir);
    } else if (key == "aligner") {
      config.aligner = parse_client(value, key, config.aligner, base_dir);
    } else if (key == "lemmatizer") {
      config.lemmatizer = parse_client(value, key, config.lemmatizer, base_dir);
    } else if (key == "ontology") {
      config.ontology = resolve(base_dir, get_as<std::string>(value, key));
    } else if (key == "templates") {
      config.templates = resolve(base_dir, get_as<std::string>(value, key));
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

Config load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.parent_path());
}

std::string canonical_config_json(const Config& config) {
  json stages = json::array();
  for (Stage stage : config.stages) stages.push_back(stage_name(stage));
  // std::map-backed json keeps keys sorted.
  json root = {{"src_lang", config.src_lang},
               {"tgt_lang", config.tgt_lang},
               {"stages", stages},
               {"fuzzy_threshold", config.fuzzy_threshold},
               {"context_window", config.context_window},
               {"max_answer_tokens", config.max_answer_tokens},
               {"mt", client_json(config.mt)},
               {"dictionary", client_json(config.dictionary)},
               {"aligner", client_json(config.aligner)},
               {"lemmatizer", client_json(config.lemmatizer)},
               {"ontology", config.ontology.string()},
               {"templates", config.templates.string()}};
  if (std::isfinite(config.null_threshold)) {
    root["null_threshold"] = config.null_threshold;
  } else {
    root["null_threshold"] = config.null_threshold > 0 ? "inf" : "-inf";
  }
  return root.dump();
}

namespace {

std::shared_ptr<ResponseCache> open_cache(
    const ClientConfig& client, std::vector<std::filesystem::path>& paths) {
  if (client.cache.empty()) return nullptr;
  if (client.kind == "replay" && !std::filesystem::exists(client.cache)) {
    throw IOError("cannot open cache " + client.cache.string());
  }
  paths.push_back(client.cache);
  return std::make_shared<ResponseCache>(client.cache);
}

}  // namespace

ClientSet::ClientSet(const Config& config) {
  config.validate();

  if (config.mt.kind != "none") {
    std::shared_ptr<MTClient> inner;
    if (config.mt.kind == "identity") {
      inner = std::make_shared<IdentityMTClient>();
    } else if (config.mt.kind == "http") {
      inner = std::make_shared<HttpMTClient>(config.mt.endpoint);
    }
    auto cache = open_cache(config.mt, cache_paths_);
    if (cache) {
      caches_.push_back(cache);
      mt_ = std::make_shared<CachedMTClient>(inner, cache);
    } else {
      mt_ = inner;
    }
  }

  if (config.dictionary.kind != "none") {
    std::shared_ptr<DictionaryClient> inner;
    if (config.dictionary.kind == "empty") {
      inner = std::make_shared<EmptyDictionaryClient>();
    }
    auto cache = open_cache(config.dictionary, cache_paths_);
    if (cache) {
      caches_.push_back(cache);
      dictionary_ = std::make_shared<CachedDictionaryClient>(inner, cache);
    } else {
      dictionary_ = inner;
    }
  }

  if (config.aligner.kind != "none") {
    std::shared_ptr<WordAligner> inner;
    if (config.aligner.kind == "diagonal") {
      inner = std::make_shared<DiagonalAligner>();
    }
    auto cache = open_cache(config.aligner, cache_paths_);
    if (cache) {
      caches_.push_back(cache);
      aligner_ = std::make_shared<CachedWordAligner>(inner, cache);
    } else {
      aligner_ = inner;
    }
  }

  if (config.lemmatizer.kind != "none") {
    std::shared_ptr<Lemmatizer> inner;
    if (config.lemmatizer.kind == "table") {
      inner = config.lemmatizer.table.empty()
                  ? std::make_shared<TableLemmatizer>()
                  : std::make_shared<TableLemmatizer>(
                        TableLemmatizer::load(config.lemmatizer.table));
    }
    auto cache = open_cache(config.lemmatizer, cache_paths_);
    if (cache) {
      caches_.push_back(cache);
      lemmatizer_ =
          std::make_shared<CachedLemmatizer>(inner, cache, config.tgt_lang);
    } else {
      lemmatizer_ = inner;
    }
  }
}

AlignmentClients ClientSet::view() const {
  return AlignmentClients{mt_.get(), dictionary_.get(), aligner_.get(),
                          lemmatizer_.get()};
}

void ClientSet::save() const {
  for (const auto& cache : caches_) cache->save();
}

std::vector<std::filesystem::path> ClientSet::cache_files() const {
  std::vector<std::filesystem::path> out;
  for (const auto& path : cache_paths_) {
    if (std::filesystem::exists(path)) out.push_back(path);
  }
  return out;
}

}  // namespace ptevent
