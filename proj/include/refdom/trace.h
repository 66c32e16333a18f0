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

// Trace records: one per referring expression, as a JSON line or as text.
//
// JSON keys, always present and in this order: utterance, argument,
// surface, determiner, underspecified, candidates (list of {stage, domain,
// pass, action, reason}), stage, selected, domain, referent, new_referent,
// verdict, fail_reason, restructure, passing. Absent values are null.

#ifndef REFDOM_TRACE_H_
#define REFDOM_TRACE_H_

#include <string>

#include "refdom/resolver.h"

namespace refdom {

std::string TraceJson(const Resolution &resolution);
std::string TraceText(const Resolution &resolution);

}  // namespace refdom

#endif  // REFDOM_TRACE_H_
