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

#ifndef PTEVENT_TESTS_SUPPORT_TEST_DATA_H_
#define PTEVENT_TESTS_SUPPORT_TEST_DATA_H_

#include <filesystem>
#include <random>
#include <string>

namespace ptevent::testing {

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(PTEVENT_TEST_DATA_DIR) / name;
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("ptevent-test-" + name + "-" +
                    std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ptevent::testing

#endif  // PTEVENT_TESTS_SUPPORT_TEST_DATA_H_
