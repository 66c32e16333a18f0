// Copyright 2026 The refdom Authors.
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

#ifndef REFDOM_ERROR_H_
#define REFDOM_ERROR_H_

#include <stdexcept>
#include <string>

namespace refdom {

enum class ErrorCode {
  kUnknownType,
  kUnknownId,
  kDuplicateId,
  kDuplicateValue,
  kDanglingMember,
  kIndexOutOfRange,
  kNoPartition,
  kGenericImmutable,
  kCycle,
  kUnknownParent,
  kDuplicateType,
  kDanglingPartType,
  kReservedType,
  kDuplicateEntity,
  kMalformedInput,
  kUnknownToken,
  kNoParse,
  kInvariantViolation,
};

const char *ErrorCodeName(ErrorCode code);

// All recoverable failures of the library are reported with this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace refdom

#endif  // REFDOM_ERROR_H_
