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

#ifndef PTEVENT_IOB_H_
#define PTEVENT_IOB_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/corpus.h"

namespace ptevent {

class EventOntology;

// One IOB2 tag: O, B-<label> or I-<label>.
struct IobTag {
  enum class Prefix { kOutside, kBegin, kInside };

  Prefix prefix = Prefix::kOutside;
  std::string label;  // empty for O

  static IobTag outside() { return {}; }
  static IobTag begin(std::string label) {
    return {Prefix::kBegin, std::move(label)};
  }
  static IobTag inside(std::string label) {
    return {Prefix::kInside, std::move(label)};
  }

  // Throws FormatError for anything other than "O", "B-x", "I-x".
  static IobTag parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const IobTag&, const IobTag&) = default;
};

// Fixed label ordering: O first, then B-/I- pairs by sorted event label.
// Index order doubles as the argmax tie-break order.
class LabelInventory {
 public:
  explicit LabelInventory(const EventOntology& ontology);

  size_t size() const { return tags_.size(); }
  const IobTag& at(size_t index) const { return tags_.at(index); }
  // Throws UnknownEventType for tags outside the inventory.
  size_t index_of(const IobTag& tag) const;
  bool contains(const IobTag& tag) const;
  const std::vector<IobTag>& tags() const { return tags_; }

 private:
  std::vector<IobTag> tags_;
  std::map<std::string, size_t, std::less<>> index_;
};

struct IobEncodeOptions {
  // Keep the first of two triggers claiming the same token instead of
  // raising SpanTokenMismatch. ACE labels some words with two event types.
  bool drop_overlapping = false;
};

// One tag per token. Throws SpanTokenMismatch when a trigger crosses a
// token boundary (or overlaps another one, unless drop_overlapping).
std::vector<IobTag> iob_encode(const Sentence& sentence,
                               const IobEncodeOptions& options = {});

// Maximal B/I runs of one label become triggers; an I-x that does not
// continue a run of x starts a new trigger. `text` is the sentence text the
// tokens index into. Throws LengthMismatch.
std::vector<Trigger> iob_decode(const std::vector<IobTag>& tags,
                                const std::vector<Token>& tokens,
                                std::string_view text);

}  // namespace ptevent

#endif  // PTEVENT_IOB_H_
