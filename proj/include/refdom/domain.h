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

// Value types of the reference-domain model: identifiers, differentiation
// criteria, partitions and the domains themselves.

#ifndef REFDOM_DOMAIN_H_
#define REFDOM_DOMAIN_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace refdom {

// Opaque identifier of a reference domain. Printed as "@" + tag.
class DomainId {
 public:
  DomainId() = default;
  explicit DomainId(std::string tag) : tag_(std::move(tag)) {}

  const std::string &tag() const { return tag_; }
  std::string str() const { return "@" + tag_; }
  bool empty() const { return tag_.empty(); }

  auto operator<=>(const DomainId &) const = default;

 private:
  std::string tag_;
};

// The point of view under which the cells of a partition differ.
struct Criterion {
  enum class Kind { kType, kProperty, kPredicate, kPosition, kGroupRole };

  Kind kind = Kind::kType;
  // Property name, verb lemma, axis or relation, or role label.
  std::string name;
  // Predicate polarity; only meaningful for kPredicate.
  bool positive = true;

  static Criterion ByType() { return {Kind::kType, "", true}; }
  static Criterion ByProperty(std::string property) {
    return {Kind::kProperty, std::move(property), true};
  }
  static Criterion ByPredicate(std::string verb, bool positive) {
    return {Kind::kPredicate, std::move(verb), positive};
  }
  static Criterion ByPosition(std::string axis) {
    return {Kind::kPosition, std::move(axis), true};
  }
  static Criterion ByGroupRole(std::string label = "") {
    return {Kind::kGroupRole, std::move(label), true};
  }

  bool operator==(const Criterion &) const = default;

  // "ByType", "ByProperty(color)", "ByPredicate(take,+)", ...
  std::string ToString() const;

  // Part-whole decomposition of an individual; exempt from the
  // cardinality >= cells rule that governs partitions of sets.
  bool IsPartWhole() const { return kind == Kind::kGroupRole && name == "parts"; }
};

struct Cell {
  std::string value;
  DomainId member;

  bool operator==(const Cell &) const = default;
};

struct Partition {
  Criterion criterion;
  std::vector<Cell> cells;
  std::optional<size_t> profiled;
  // Context-wide update counter value of the last change to this partition.
  uint64_t stamp = 0;

  bool operator==(const Partition &) const = default;

  std::optional<DomainId> ProfiledMember() const {
    if (!profiled) return std::nullopt;
    return cells[*profiled].member;
  }
};

// A positive count or Unbounded. Unbounded covers every finite count.
class Cardinality {
 public:
  Cardinality() = default;  // Unbounded
  static Cardinality Unbounded() { return Cardinality(); }
  static Cardinality Exactly(int64_t n);

  bool unbounded() const { return !count_.has_value(); }
  int64_t count() const { return *count_; }
  bool IsOne() const { return count_ && *count_ == 1; }

  // True if this cardinality is at least n.
  bool Covers(int64_t n) const { return !count_ || *count_ >= n; }

  Cardinality Plus(const Cardinality &other) const;
  std::string ToString() const;

  bool operator==(const Cardinality &) const = default;

 private:
  std::optional<int64_t> count_;
};

enum class Source { kDiscourse, kPerception, kConceptual };

const char *SourceName(Source source);

using Properties = std::map<std::string, std::string>;

// True if every (name, value) of `required` is present in `props`.
bool HasProperties(const Properties &props, const Properties &required);

std::string PropertiesToString(const Properties &props);

struct ReferenceDomain {
  DomainId id;
  std::string type;
  Cardinality cardinality;
  Properties properties;
  std::vector<Partition> partitions;
  Source source = Source::kDiscourse;
  bool generic = false;

  bool operator==(const ReferenceDomain &) const = default;

  bool partitioned() const { return !partitions.empty(); }
  bool HasProfiledCell() const;
};

}  // namespace refdom

#endif  // REFDOM_DOMAIN_H_
