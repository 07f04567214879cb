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

#ifndef PTEVENT_ONTOLOGY_H_
#define PTEVENT_ONTOLOGY_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ptevent/corpus.h"

namespace ptevent {

// Event subtype inventory with the ordered argument roles of each subtype.
// Loaded from `ontology.json`: { "Type.Subtype": ["Role", ...], ... }.
class EventOntology {
 public:
  static EventOntology load(const std::filesystem::path& path);
  static EventOntology from_json_text(std::string_view json_text);

  // The ontology shipped in the data directory.
  static const EventOntology& bundled();

  // Throws UnknownEventType for labels outside the ontology.
  const std::vector<std::string>& role_set(std::string_view label) const;

  bool contains(std::string_view label) const;
  bool has_role(std::string_view label, std::string_view role) const;

  // Sorted labels ("Type.Subtype").
  std::vector<std::string> labels() const;
  std::set<std::string> types() const;
  size_t size() const { return roles_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> roles_;
};

// Directory holding ontology.json and templates.pt.json. The
// PTEVENT_DATA_DIR environment variable overrides the build-time default.
std::filesystem::path data_dir();

}  // namespace ptevent

#endif  // PTEVENT_ONTOLOGY_H_
