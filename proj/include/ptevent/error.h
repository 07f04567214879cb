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

#ifndef PTEVENT_ERROR_H_
#define PTEVENT_ERROR_H_

#include <stdexcept>
#include <string>

namespace ptevent {

// Validation failures map to exit code 1, IO and client failures to 2.
enum class ErrorKind {
  kUnknownEventType,
  kSpanTokenMismatch,
  kLengthMismatch,
  kFormat,
  kOffset,
  kMissingTemplate,
  kShapeMismatch,
  kConfig,
  kUsage,
  kIO,
  kAlignmentIO,
  kBackend,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  bool is_validation() const {
    return kind_ != ErrorKind::kIO && kind_ != ErrorKind::kAlignmentIO &&
           kind_ != ErrorKind::kBackend;
  }

 private:
  ErrorKind kind_;
};

#define PTEVENT_DEFINE_ERROR(Name, Kind)                                  \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& message) : Error(Kind, message) {}   \
  };

PTEVENT_DEFINE_ERROR(UnknownEventType, ErrorKind::kUnknownEventType)
PTEVENT_DEFINE_ERROR(SpanTokenMismatch, ErrorKind::kSpanTokenMismatch)
PTEVENT_DEFINE_ERROR(LengthMismatch, ErrorKind::kLengthMismatch)
PTEVENT_DEFINE_ERROR(FormatError, ErrorKind::kFormat)
PTEVENT_DEFINE_ERROR(OffsetError, ErrorKind::kOffset)
PTEVENT_DEFINE_ERROR(MissingTemplate, ErrorKind::kMissingTemplate)
PTEVENT_DEFINE_ERROR(ShapeMismatch, ErrorKind::kShapeMismatch)
PTEVENT_DEFINE_ERROR(ConfigError, ErrorKind::kConfig)
PTEVENT_DEFINE_ERROR(UsageError, ErrorKind::kUsage)
PTEVENT_DEFINE_ERROR(IOError, ErrorKind::kIO)
PTEVENT_DEFINE_ERROR(BackendError, ErrorKind::kBackend)

#undef PTEVENT_DEFINE_ERROR

// Raised by translation clients and caches. Always retryable: the request
// can be replayed once the transport or the recorded cache is fixed.
class AlignmentIOError : public Error {
 public:
  explicit AlignmentIOError(const std::string& message)
      : Error(ErrorKind::kAlignmentIO, message) {}
  bool retryable() const { return true; }
};

}  // namespace ptevent

#endif  // PTEVENT_ERROR_H_
