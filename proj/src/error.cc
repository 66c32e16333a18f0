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

#include "refdom/error.h"

namespace refdom {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownType: return "unknown-type";
    case ErrorCode::kUnknownId: return "unknown-id";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kDuplicateValue: return "duplicate-value";
    case ErrorCode::kDanglingMember: return "dangling-member";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kNoPartition: return "no-partition";
    case ErrorCode::kGenericImmutable: return "generic-immutable";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kUnknownParent: return "unknown-parent";
    case ErrorCode::kDuplicateType: return "duplicate-type";
    case ErrorCode::kDanglingPartType: return "dangling-part-type";
    case ErrorCode::kReservedType: return "reserved-type";
    case ErrorCode::kDuplicateEntity: return "duplicate-entity";
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kUnknownToken: return "unknown-token";
    case ErrorCode::kNoParse: return "no-parse";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "error";
}

}  // namespace refdom
