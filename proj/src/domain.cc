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

#include "refdom/domain.h"

#include "refdom/error.h"

namespace refdom {

std::string Criterion::ToString() const {
  switch (kind) {
    case Kind::kType:
      return "ByType";
    case Kind::kProperty:
      return "ByProperty(" + name + ")";
    case Kind::kPredicate:
      return "ByPredicate(" + name + (positive ? ",+)" : ",-)");
    case Kind::kPosition:
      return "ByPosition(" + name + ")";
    case Kind::kGroupRole:
      return name.empty() ? "ByGroupRole" : "ByGroupRole(" + name + ")";
  }
  return "?";
}

Cardinality Cardinality::Exactly(int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kMalformedInput,
                "cardinality must be positive, got " + std::to_string(n));
  }
  Cardinality c;
  c.count_ = n;
  return c;
}

Cardinality Cardinality::Plus(const Cardinality &other) const {
  if (unbounded() || other.unbounded()) return Unbounded();
  return Exactly(count() + other.count());
}

std::string Cardinality::ToString() const {
  return count_ ? std::to_string(*count_) : "unbounded";
}

const char *SourceName(Source source) {
  switch (source) {
    case Source::kDiscourse: return "discourse";
    case Source::kPerception: return "perception";
    case Source::kConceptual: return "conceptual";
  }
  return "?";
}

bool HasProperties(const Properties &props, const Properties &required) {
  for (const auto &[name, value] : required) {
    auto it = props.find(name);
    if (it == props.end() || it->second != value) return false;
  }
  return true;
}

std::string PropertiesToString(const Properties &props) {
  std::string out = "{";
  bool first = true;
  for (const auto &[name, value] : props) {
    if (!first) out += ",";
    out += name + "=" + value;
    first = false;
  }
  return out + "}";
}

bool ReferenceDomain::HasProfiledCell() const {
  for (const Partition &p : partitions) {
    if (p.profiled) return true;
  }
  return false;
}

}  // namespace refdom
