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

#include "ptevent/iob.h"

#include "ptevent/error.h"
#include "ptevent/ontology.h"
#include "ptevent/unicode.h"

namespace ptevent {

IobTag IobTag::parse(std::string_view text) {
  if (text == "O") return outside();
  if (text.size() > 2 && text[1] == '-') {
    if (text[0] == 'B') return begin(std::string(text.substr(2)));
    if (text[0] == 'I') return inside(std::string(text.substr(2)));
  }
  throw FormatError("malformed IOB tag '" + std::string(text) + "'");
}

std::string IobTag::str() const {
  switch (prefix) {
    case Prefix::kOutside: return "O";
    case Prefix::kBegin: return "B-" + label;
    case Prefix::kInside: return "I-" + label;
  }
  return "O";
}

LabelInventory::LabelInventory(const EventOntology& ontology) {
  tags_.push_back(IobTag::outside());
  for (const std::string& label : ontology.labels()) {
    tags_.push_back(IobTag::begin(label));
    tags_.push_back(IobTag::inside(label));
  }
  for (size_t i = 0; i < tags_.size(); ++i) index_.emplace(tags_[i].str(), i);
}

size_t LabelInventory::index_of(const IobTag& tag) const {
  auto it = index_.find(tag.str());
  if (it == index_.end()) {
    throw UnknownEventType("tag '" + tag.str() + "' not in label inventory");
  }
  return it->second;
}

bool LabelInventory::contains(const IobTag& tag) const {
  return index_.find(tag.str()) != index_.end();
}

std::vector<IobTag> iob_encode(const Sentence& sentence,
                               const IobEncodeOptions& options) {
  std::vector<IobTag> tags(sentence.tokens.size());
  for (const EventMention& mention : sentence.mentions) {
    const auto [first, last] =
        token_range(sentence.tokens, mention.trigger.span);
    bool taken = false;
    for (size_t i = first; i <= last; ++i) {
      taken |= tags[i].prefix != IobTag::Prefix::kOutside;
    }
    if (taken) {
      if (options.drop_overlapping) continue;
      throw SpanTokenMismatch("sentence '" + sentence.id + "': trigger '" +
                              mention.trigger.span.text +
                              "' overlaps another trigger");
    }
    const std::string label = mention.trigger.event_type.label();
    tags[first] = IobTag::begin(label);
    for (size_t i = first + 1; i <= last; ++i) tags[i] = IobTag::inside(label);
  }
  return tags;
}

std::vector<Trigger> iob_decode(const std::vector<IobTag>& tags,
                                const std::vector<Token>& tokens,
                                std::string_view text) {
  if (tags.size() != tokens.size()) {
    throw LengthMismatch(std::to_string(tags.size()) + " tags for " +
                         std::to_string(tokens.size()) + " tokens");
  }
  const std::u32string u32 = unicode::to_u32(text);
  std::vector<Trigger> triggers;
  size_t run_start = 0;
  const std::string* run_label = nullptr;

  auto close = [&](size_t end_token) {
    if (run_label == nullptr) return;
    triggers.push_back(Trigger{
        make_span(u32, tokens[run_start].start, tokens[end_token - 1].end),
        EventType::parse(*run_label)});
    run_label = nullptr;
  };

  for (size_t i = 0; i < tags.size(); ++i) {
    const IobTag& tag = tags[i];
    switch (tag.prefix) {
      case IobTag::Prefix::kOutside:
        close(i);
        break;
      case IobTag::Prefix::kInside:
        if (run_label != nullptr && *run_label == tag.label) break;
        [[fallthrough]];
      case IobTag::Prefix::kBegin:
        close(i);
        run_start = i;
        run_label = &tag.label;
        break;
    }
  }
  close(tags.size());
  return triggers;
}

}  // namespace ptevent
