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

#include "ptevent/trigger_tagger.h"

#include <algorithm>
#include <cmath>

#include "ptevent/error.h"
#include "ptevent/ingestion.h"
#include "ptevent/io.h"

namespace ptevent {

namespace {

std::string token_key(const std::vector<std::string>& tokens) {
  std::string key;
  for (const auto& token : tokens) {
    key += token;
    key.push_back('\x1e');
  }
  return key;
}

std::vector<double> one_hot(size_t size, size_t index) {
  std::vector<double> scores(size, 0.0);
  scores[index] = 1.0;
  return scores;
}

}  // namespace

size_t emit_trigger_training(const Corpus& corpus,
                             const std::filesystem::path& path,
                             const std::vector<std::string>& skip_sentence_ids,
                             const IobEncodeOptions& options) {
  Corpus kept;
  kept.split = corpus.split;
  kept.language = corpus.language;
  for (const Sentence& sentence : corpus.sentences) {
    if (std::find(skip_sentence_ids.begin(), skip_sentence_ids.end(),
                  sentence.id) != skip_sentence_ids.end()) {
      continue;
    }
    if (sentence.tokens.empty()) continue;
    kept.sentences.push_back(sentence);
  }
  write_conll_iob(kept, path, options);
  return kept.sentences.size();
}

std::string format_label_inventory(const LabelInventory& inventory) {
  std::string out;
  for (const IobTag& tag : inventory.tags()) out += tag.str() + "\n";
  return out;
}

void write_label_inventory(const LabelInventory& inventory,
                           const std::filesystem::path& path) {
  write_file(path, format_label_inventory(inventory));
}

std::vector<Trigger> predict_triggers(const Sentence& sentence,
                                      TokenLabelBackend& backend,
                                      const LabelInventory& inventory) {
  std::vector<std::string> tokens;
  tokens.reserve(sentence.tokens.size());
  for (const Token& token : sentence.tokens) tokens.push_back(token.surface);

  std::vector<std::vector<double>> scores;
  try {
    scores = backend.predict(tokens);
  } catch (const std::exception& e) {
    throw BackendError("sentence '" + sentence.id +
                       "': token backend failed: " + e.what());
  }
  if (scores.size() != tokens.size()) {
    throw BackendError("sentence '" + sentence.id + "': backend returned " +
                       std::to_string(scores.size()) + " score vectors for " +
                       std::to_string(tokens.size()) + " tokens");
  }
  std::vector<IobTag> tags;
  tags.reserve(tokens.size());
  for (size_t i = 0; i < scores.size(); ++i) {
    const auto& row = scores[i];
    if (row.size() != inventory.size()) {
      throw BackendError("sentence '" + sentence.id + "': token " +
                         std::to_string(i) + " has " +
                         std::to_string(row.size()) + " scores, expected " +
                         std::to_string(inventory.size()));
    }
    if (!std::all_of(row.begin(), row.end(),
                     [](double x) { return std::isfinite(x); })) {
      throw BackendError("sentence '" + sentence.id +
                         "': non-finite score at token " + std::to_string(i));
    }
    // max_element returns the first maximum, i.e. the lowest index.
    const auto best = std::max_element(row.begin(), row.end());
    tags.push_back(
        inventory.at(static_cast<size_t>(std::distance(row.begin(), best))));
  }
  return iob_decode(tags, sentence.tokens, sentence.text);
}

OracleTokenLabelBackend::OracleTokenLabelBackend(
    const Corpus& gold, const LabelInventory& inventory)
    : inventory_(inventory) {
  for (const Sentence& sentence : gold.sentences) {
    std::vector<std::string> tokens;
    for (const Token& token : sentence.tokens) tokens.push_back(token.surface);
    IobEncodeOptions options;
    options.drop_overlapping = true;
    tags_.emplace(token_key(tokens), iob_encode(sentence, options));
  }
}

std::vector<std::vector<double>> OracleTokenLabelBackend::predict(
    const std::vector<std::string>& tokens) {
  std::vector<std::vector<double>> scores;
  auto it = tags_.find(token_key(tokens));
  for (size_t i = 0; i < tokens.size(); ++i) {
    const size_t index =
        it == tags_.end() ? 0 : inventory_.index_of(it->second[i]);
    scores.push_back(one_hot(inventory_.size(), index));
  }
  return scores;
}

std::vector<std::vector<double>> OutsideTokenLabelBackend::predict(
    const std::vector<std::string>& tokens) {
  return std::vector<std::vector<double>>(tokens.size(),
                                          one_hot(inventory_.size(), 0));
}

}  // namespace ptevent
