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

#ifndef PTEVENT_TRIGGER_TAGGER_H_
#define PTEVENT_TRIGGER_TAGGER_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ptevent/corpus.h"
#include "ptevent/iob.h"

namespace ptevent {

// Token classifier over word-level tokens. Subword pooling belongs to the
// adapter that wraps a concrete model.
class TokenLabelBackend {
 public:
  virtual ~TokenLabelBackend() = default;
  // One score vector per token, each indexed by LabelInventory order.
  virtual std::vector<std::vector<double>> predict(
      const std::vector<std::string>& tokens) = 0;
  // True if predict() may be called concurrently.
  virtual bool reentrant() const { return false; }
};

// Writes the CoNLL-IOB training file, leaving out sentences listed in
// `skip_sentence_ids` (sentences whose trigger could not be projected).
// Returns the number of sentences written.
size_t emit_trigger_training(const Corpus& corpus,
                             const std::filesystem::path& path,
                             const std::vector<std::string>& skip_sentence_ids = {},
                             const IobEncodeOptions& options = {});

// labels.txt: one tag per line in inventory order.
std::string format_label_inventory(const LabelInventory& inventory);
void write_label_inventory(const LabelInventory& inventory,
                           const std::filesystem::path& path);

// Per-token argmax (ties go to the lower inventory index), then
// iob_decode. Backend failures and malformed scores raise BackendError
// naming the sentence.
std::vector<Trigger> predict_triggers(const Sentence& sentence,
                                      TokenLabelBackend& backend,
                                      const LabelInventory& inventory);

// Reproduces the gold tags of a corpus, keyed by token sequence;
// unknown sentences get all-O.
class OracleTokenLabelBackend : public TokenLabelBackend {
 public:
  OracleTokenLabelBackend(const Corpus& gold, const LabelInventory& inventory);
  std::vector<std::vector<double>> predict(
      const std::vector<std::string>& tokens) override;
  bool reentrant() const override { return true; }

 private:
  const LabelInventory& inventory_;
  std::map<std::string, std::vector<IobTag>> tags_;
};

// Scores O highest for every token.
class OutsideTokenLabelBackend : public TokenLabelBackend {
 public:
  explicit OutsideTokenLabelBackend(const LabelInventory& inventory)
      : inventory_(inventory) {}
  std::vector<std::vector<double>> predict(
      const std::vector<std::string>& tokens) override;
  bool reentrant() const override { return true; }

 private:
  const LabelInventory& inventory_;
};

}  // namespace ptevent

#endif  // PTEVENT_TRIGGER_TAGGER_H_
