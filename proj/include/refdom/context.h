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

#ifndef REFDOM_CONTEXT_H_
#define REFDOM_CONTEXT_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refdom/domain.h"
#include "refdom/type_hierarchy.h"

namespace refdom {

// Activation-ordered store of reference domains for one dialogue session.
//
// Every non-generic domain appears exactly once in the activation list, most
// activated first. Activation is recency of use: creating or touching a
// domain moves it to the front. Generic domains live in the store but are
// never activated and never mutated.
//
// A ContextModel is a plain value; copies are independent.
class ContextModel {
 public:
  explicit ContextModel(std::shared_ptr<const TypeHierarchy> types);

  // Stores a new domain with no partitions and puts it at the head of the
  // activation list. An empty tag mints "d<N>". Throws kUnknownType or
  // kDuplicateId.
  DomainId NewDomain(std::string type, Cardinality cardinality,
                     Properties properties, Source source,
                     std::string_view tag = {});

  // Stores a generic (conceptual, unbounded, never activated) domain.
  DomainId NewGenericDomain(std::string type, Properties properties,
                            std::string_view tag = {});

  // Appends a partition with no profiled cell and returns its index.
  // Throws kDuplicateValue, kDanglingMember, kGenericImmutable.
  size_t AddPartition(const DomainId &domain, Criterion criterion,
                      std::vector<Cell> cells);

  // Appends a cell to an existing partition; returns the new cell index.
  size_t AddCell(const DomainId &domain, size_t partition, Cell cell);

  // Profiles one cell, clearing any other profiled cell of the partition.
  const ReferenceDomain &Profile(const DomainId &domain, size_t partition,
                                 size_t cell);

  // Profiled member of the most recently updated partition that has one.
  std::optional<DomainId> FocusedElement(const DomainId &domain) const;

  // Index of the partition FocusedElement reads from.
  std::optional<size_t> FocusedPartition(const DomainId &domain) const;

  // Stable move-to-front. Throws kUnknownId for unknown or generic ids.
  void Touch(const DomainId &domain);

  void SetProperty(const DomainId &domain, const std::string &name,
                   const std::string &value);

  bool Contains(const DomainId &domain) const;
  const ReferenceDomain &Get(const DomainId &domain) const;
  const std::vector<DomainId> &activation() const { return activation_; }
  const std::map<DomainId, ReferenceDomain> &store() const { return store_; }
  const TypeHierarchy &types() const { return *types_; }

  // Generic-domain memo keyed by (type, properties).
  std::optional<DomainId> FindGeneric(const std::string &type,
                                      const Properties &props) const;

  // Returns prefix itself when free (numbered == false), otherwise
  // prefix + the smallest counter >= 1 (or >= 2 for unnumbered prefixes)
  // that does not name an existing domain.
  std::string MintTag(const std::string &prefix, bool numbered) const;

  // Throws kInvariantViolation if any structural invariant is broken.
  void CheckInvariants() const;

 private:
  ReferenceDomain &Mutable(const DomainId &domain);
  DomainId Insert(ReferenceDomain domain, std::string_view tag);

  std::shared_ptr<const TypeHierarchy> types_;
  std::map<DomainId, ReferenceDomain> store_;
  std::vector<DomainId> activation_;
  std::map<std::pair<std::string, Properties>, DomainId> generics_;
  uint64_t next_id_ = 1;
  uint64_t clock_ = 0;
};

}  // namespace refdom

#endif  // REFDOM_CONTEXT_H_
