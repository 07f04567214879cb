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

// Builds replay caches from a readable list of recorded responses:
//
//   { "src_lang": "en", "tgt_lang": "pt",
//     "translate": { "source text": "translation" },
//     "lookup": { "source text": ["alternative", ...] },
//     "align": [ { "src": [tokens], "tgt": [tokens], "links": [[s, t]] } ],
//     "lemmatize": [ { "tokens": [tokens], "lemmas": [lemmas] } ] }
//
// Writes mt.json, dictionary.json, aligner.json and lemmatizer.json (for
// the sections present) into the output directory.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ptevent/clients.h"
#include "ptevent/error.h"
#include "ptevent/io.h"
#include "ptevent/unicode.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_cache(const fs::path& path, const json& entries) {
  // nlohmann::json objects are sorted by key.
  ptevent::write_file(path, entries.dump(2) + "\n");
}

int record(const fs::path& responses, const fs::path& out_dir) {
  const json doc = json::parse(ptevent::read_file(responses));
  const std::string src = doc.value("src_lang", "en");
  const std::string tgt = doc.value("tgt_lang", "pt");
  auto nfc = [](const std::string& s) { return ptevent::unicode::nfc(s); };

  if (doc.contains("translate")) {
    json cache = json::object();
    for (const auto& [text, translation] : doc["translate"].items()) {
      cache[ptevent::mt_cache_key(nfc(text), src, tgt)] =
          nfc(translation.get<std::string>());
    }
    write_cache(out_dir / "mt.json", cache);
  }
  if (doc.contains("lookup")) {
    json cache = json::object();
    for (const auto& [text, alternatives] : doc["lookup"].items()) {
      json list = json::array();
      for (const auto& a : alternatives) list.push_back(nfc(a.get<std::string>()));
      cache[ptevent::dictionary_cache_key(nfc(text), src, tgt)] = list;
    }
    write_cache(out_dir / "dictionary.json", cache);
  }
  auto tokens = [&](const json& list) {
    std::vector<std::string> out;
    for (const auto& t : list) out.push_back(nfc(t.get<std::string>()));
    return out;
  };
  if (doc.contains("align")) {
    json cache = json::object();
    for (const auto& entry : doc["align"]) {
      cache[ptevent::aligner_cache_key(tokens(entry.at("src")),
                                       tokens(entry.at("tgt")))] =
          entry.at("links");
    }
    write_cache(out_dir / "aligner.json", cache);
  }
  if (doc.contains("lemmatize")) {
    json cache = json::object();
    for (const auto& entry : doc["lemmatize"]) {
      cache[ptevent::lemmatizer_cache_key(tokens(entry.at("tokens")), tgt)] =
          tokens(entry.at("lemmas"));
    }
    write_cache(out_dir / "lemmatizer.json", cache);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build replay caches from recorded responses",
               "ptevent-record-cache"};
  std::string responses;
  std::string out_dir = ".";
  app.add_option("responses", responses, "Recorded responses JSON")
      ->required();
  app.add_option("--out-dir", out_dir, "Directory for the cache files");
  CLI11_PARSE(app, argc, argv);
  try {
    return record(responses, out_dir);
  } catch (const ptevent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
