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

// Underspecified domains: the constraint pattern a referring expression
// imposes on candidate domains, and the compatibility test that matches a
// pattern against a contextual domain.

#ifndef REFDOM_UNDERSPECIFIED_H_
#define REFDOM_UNDERSPECIFIED_H_

#include <optional>
#include <string>

#include "refdom/context.h"
#include "refdom/domain.h"
#include "refdom/knowledge_base.h"
#include "refdom/parser.h"

namespace refdom {

// Head type and modifiers an entity must have. An absent type accepts any.
struct Description {
  std::optional<std::string> type;
  Properties properties;

  bool operator==(const Description &) const = default;
};

// Criterion with an optional wildcard name ("any predicate").
struct CriterionPattern {
  Criterion::Kind kind = Criterion::Kind::kType;
  std::optional<std::string> name;

  bool operator==(const CriterionPattern &) const = default;
  bool Matches(const Criterion &criterion) const;
  std::string ToString() const;
};

struct PartitionRequirement {
  enum class Kind { kNone, kVirtual, kExisting };
  Kind kind = Kind::kNone;
  // Absent under kExisting means any partition.
  std::optional<CriterionPattern> pattern;

  bool operator==(const PartitionRequirement &) const = default;
};

struct UnderspecifiedDomain {
  DeterminerClass det = DeterminerClass::kDefinite;
  std::optional<Description> type_constraint;
  std::optional<int64_t> min_cardinality;
  PartitionRequirement partition;
  bool focus_required = false;
  bool exclude_profiled = false;
  std::optional<std::string> reclassify_as;
  bool plural = false;
  // Size of the referent minted by an indefinite.
  int count = 1;
  AgreementFeatures agreement;

  bool operator==(const UnderspecifiedDomain &) const = default;
  // Compact summary for traces, e.g. "type=CIRCLE{size=big} min=2 virtual".
  std::string ToString() const;
};

UnderspecifiedDomain BuildUnderspecified(const RefExpr &expr,
                                         const KnowledgeBase &kb);

// True if `domain` is of a subtype of the description's type and carries
// its properties.
bool Satisfies(const ReferenceDomain &domain, const Description &description,
               const TypeHierarchy &types);

// Which parts of a domain satisfied the pattern.
struct Binding {
  std::optional<size_t> partition;
  // Cell holding the referent (definites) or the focused cell (pronouns).
  std::optional<size_t> cell;
  // The bound cell was found as the profiled member of an indefinite's
  // predicate partition rather than through the criterion.
  bool via_focus = false;
  // Plural definite: the referent is the domain itself.
  bool whole_domain = false;

  bool operator==(const Binding &) const = default;
};

struct Compatibility {
  bool pass = false;
  // "type", "cardinality", "partition", "focus" or "agreement".
  std::string reason;
  Binding binding;
};

struct MatchOptions {
  bool agreement = false;
};

// Checks, in order, type, cardinality, partition, focus and agreement, and
// reports the first violated one.
Compatibility Compatible(const UnderspecifiedDomain &usd,
                         const ReferenceDomain &domain,
                         const ContextModel &context,
                         const MatchOptions &options = {});

// Binding for a domain known to be compatible. Throws kInvariantViolation
// otherwise.
Binding Unify(const UnderspecifiedDomain &usd, const ReferenceDomain &domain,
              const ContextModel &context, const MatchOptions &options = {});

}  // namespace refdom

#endif  // REFDOM_UNDERSPECIFIED_H_
