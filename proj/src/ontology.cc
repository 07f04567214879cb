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

#include "ptevent/ontology.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ptevent/error.h"

#ifndef PTEVENT_DEFAULT_DATA_DIR
#define PTEVENT_DEFAULT_DATA_DIR "data"
#endif

namespace ptevent {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("PTEVENT_DATA_DIR"); env && *env) {
    return env;
  }
  return PTEVENT_DEFAULT_DATA_DIR;
}

EventOntology EventOntology::from_json_text(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("ontology: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("ontology: expected an object");

  EventOntology ontology;
  for (const auto& [label, roles] : doc.items()) {
    EventType::parse(label);
    if (!roles.is_array() || roles.empty()) {
      throw FormatError("ontology: role set of " + label +
                        " must be a non-empty array");
    }
    std::vector<std::string> role_list;
    for (const auto& role : roles) {
      if (!role.is_string()) {
        throw FormatError("ontology: non-string role in " + label);
      }
      role_list.push_back(role.get<std::string>());
    }
    ontology.roles_.emplace(label, std::move(role_list));
  }
  return ontology;
}

EventOntology EventOntology::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open ontology file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

const EventOntology& EventOntology::bundled() {
  static const EventOntology ontology = load(data_dir() / "ontology.json");
  return ontology;
}

const std::vector<std::string>& EventOntology::role_set(
    std::string_view label) const {
  auto it = roles_.find(label);
  if (it == roles_.end()) {
    throw UnknownEventType("unknown event type '" + std::string(label) + "'");
  }
  return it->second;
}

bool EventOntology::contains(std::string_view label) const {
  return roles_.find(label) != roles_.end();
}

bool EventOntology::has_role(std::string_view label,
                             std::string_view role) const {
  auto it = roles_.find(label);
  if (it == roles_.end()) return false;
  for (const auto& r : it->second) {
    if (r == role) return true;
  }
  return false;
}

std::vector<std::string> EventOntology::labels() const {
  std::vector<std::string> out;
  out.reserve(roles_.size());
  for (const auto& [label, roles] : roles_) out.push_back(label);
  return out;
}

std::set<std::string> EventOntology::types() const {
  std::set<std::string> out;
  for (const auto& [label, roles] : roles_) {
    out.insert(EventType::parse(label).type);
  }
  return out;
}

}  // namespace ptevent
