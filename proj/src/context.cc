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

#include "refdom/context.h"

#include <algorithm>
#include <set>

#include "refdom/error.h"

namespace refdom {
namespace {

void CheckDistinctValues(const std::vector<Cell> &cells) {
  std::set<std::string> values;
  for (const Cell &cell : cells) {
    if (!values.insert(cell.value).second) {
      throw Error(ErrorCode::kDuplicateValue, cell.value);
    }
  }
}

}  // namespace

ContextModel::ContextModel(std::shared_ptr<const TypeHierarchy> types)
    : types_(std::move(types)) {}

DomainId ContextModel::Insert(ReferenceDomain domain, std::string_view tag) {
  if (!types_->Knows(domain.type)) {
    throw Error(ErrorCode::kUnknownType, domain.type);
  }
  std::string t = tag.empty() ? MintTag("d", true) : std::string(tag);
  DomainId id(t);
  if (store_.count(id)) throw Error(ErrorCode::kDuplicateId, id.str());
  domain.id = id;
  const bool generic = domain.generic;
  store_.emplace(id, std::move(domain));
  if (!generic) activation_.insert(activation_.begin(), id);
  return id;
}

DomainId ContextModel::NewDomain(std::string type, Cardinality cardinality,
                                 Properties properties, Source source,
                                 std::string_view tag) {
  ReferenceDomain d;
  d.type = std::move(type);
  d.cardinality = cardinality;
  d.properties = std::move(properties);
  d.source = source;
  return Insert(std::move(d), tag);
}

DomainId ContextModel::NewGenericDomain(std::string type,
                                        Properties properties,
                                        std::string_view tag) {
  ReferenceDomain d;
  d.type = type;
  d.cardinality = Cardinality::Unbounded();
  d.properties = properties;
  d.source = Source::kConceptual;
  d.generic = true;
  DomainId id = Insert(std::move(d), tag);
  generics_.emplace(std::make_pair(std::move(type), std::move(properties)),
                    id);
  return id;
}

std::optional<DomainId> ContextModel::FindGeneric(
    const std::string &type, const Properties &props) const {
  auto it = generics_.find({type, props});
  if (it == generics_.end()) return std::nullopt;
  return it->second;
}

ReferenceDomain &ContextModel::Mutable(const DomainId &domain) {
  auto it = store_.find(domain);
  if (it == store_.end()) throw Error(ErrorCode::kUnknownId, domain.str());
  if (it->second.generic) {
    throw Error(ErrorCode::kGenericImmutable, domain.str());
  }
  return it->second;
}

size_t ContextModel::AddPartition(const DomainId &domain, Criterion criterion,
                                  std::vector<Cell> cells) {
  ReferenceDomain &d = Mutable(domain);
  CheckDistinctValues(cells);
  for (const Cell &cell : cells) {
    if (!store_.count(cell.member)) {
      throw Error(ErrorCode::kDanglingMember, cell.member.str());
    }
  }
  if (!criterion.IsPartWhole() &&
      !d.cardinality.Covers(static_cast<int64_t>(cells.size()))) {
    throw Error(ErrorCode::kInvariantViolation,
                domain.str() + " cannot hold " + std::to_string(cells.size()) +
                    " cells");
  }
  Partition p;
  p.criterion = std::move(criterion);
  p.cells = std::move(cells);
  p.stamp = ++clock_;
  d.partitions.push_back(std::move(p));
  return d.partitions.size() - 1;
}

size_t ContextModel::AddCell(const DomainId &domain, size_t partition,
                             Cell cell) {
  ReferenceDomain &d = Mutable(domain);
  if (partition >= d.partitions.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, domain.str());
  }
  if (!store_.count(cell.member)) {
    throw Error(ErrorCode::kDanglingMember, cell.member.str());
  }
  Partition &p = d.partitions[partition];
  std::vector<Cell> cells = p.cells;
  cells.push_back(cell);
  CheckDistinctValues(cells);
  if (!p.criterion.IsPartWhole() &&
      !d.cardinality.Covers(static_cast<int64_t>(cells.size()))) {
    throw Error(ErrorCode::kInvariantViolation,
                domain.str() + " cannot hold another cell");
  }
  p.cells = std::move(cells);
  p.stamp = ++clock_;
  return p.cells.size() - 1;
}

const ReferenceDomain &ContextModel::Profile(const DomainId &domain,
                                             size_t partition, size_t cell) {
  ReferenceDomain &d = Mutable(domain);
  if (d.partitions.empty()) {
    throw Error(ErrorCode::kNoPartition, domain.str());
  }
  if (partition >= d.partitions.size() ||
      cell >= d.partitions[partition].cells.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                domain.str() + "[" + std::to_string(partition) + "][" +
                    std::to_string(cell) + "]");
  }
  Partition &p = d.partitions[partition];
  p.profiled = cell;
  p.stamp = ++clock_;
  return d;
}

std::optional<size_t> ContextModel::FocusedPartition(
    const DomainId &domain) const {
  const ReferenceDomain &d = Get(domain);
  std::optional<size_t> best;
  for (size_t i = 0; i < d.partitions.size(); ++i) {
    const Partition &p = d.partitions[i];
    if (!p.profiled) continue;
    if (!best || p.stamp > d.partitions[*best].stamp) best = i;
  }
  return best;
}

std::optional<DomainId> ContextModel::FocusedElement(
    const DomainId &domain) const {
  std::optional<size_t> p = FocusedPartition(domain);
  if (!p) return std::nullopt;
  return Get(domain).partitions[*p].ProfiledMember();
}

void ContextModel::Touch(const DomainId &domain) {
  auto it = std::find(activation_.begin(), activation_.end(), domain);
  if (it == activation_.end()) {
    throw Error(ErrorCode::kUnknownId, domain.str());
  }
  std::rotate(activation_.begin(), it, it + 1);
}

void ContextModel::SetProperty(const DomainId &domain, const std::string &name,
                               const std::string &value) {
  Mutable(domain).properties[name] = value;
}

bool ContextModel::Contains(const DomainId &domain) const {
  return store_.count(domain) != 0;
}

const ReferenceDomain &ContextModel::Get(const DomainId &domain) const {
  auto it = store_.find(domain);
  if (it == store_.end()) throw Error(ErrorCode::kUnknownId, domain.str());
  return it->second;
}

std::string ContextModel::MintTag(const std::string &prefix,
                                  bool numbered) const {
  if (!numbered && !prefix.empty() && !store_.count(DomainId(prefix))) {
    return prefix;
  }
  for (int n = numbered ? 1 : 2;; ++n) {
    std::string tag = prefix + std::to_string(n);
    if (!store_.count(DomainId(tag))) return tag;
  }
}

void ContextModel::CheckInvariants() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::kInvariantViolation, what);
  };
  std::set<DomainId> active(activation_.begin(), activation_.end());
  if (active.size() != activation_.size()) fail("activation has duplicates");
  size_t non_generic = 0;
  for (const auto &[id, d] : store_) {
    if (d.id != id) fail(id.str() + " stored under the wrong key");
    if (d.generic) {
      if (!d.cardinality.unbounded()) fail(id.str() + " generic but bounded");
      if (active.count(id)) fail(id.str() + " generic but activated");
      continue;
    }
    ++non_generic;
    if (!active.count(id)) fail(id.str() + " missing from activation");
    for (const Partition &p : d.partitions) {
      std::set<std::string> values;
      for (const Cell &cell : p.cells) {
        if (!values.insert(cell.value).second) {
          fail(id.str() + " duplicate criterion value " + cell.value);
        }
        if (!store_.count(cell.member)) {
          fail(id.str() + " dangling member " + cell.member.str());
        }
      }
      if (p.profiled && *p.profiled >= p.cells.size()) {
        fail(id.str() + " profiled index out of range");
      }
      if (!p.criterion.IsPartWhole() &&
          !d.cardinality.Covers(static_cast<int64_t>(p.cells.size()))) {
        fail(id.str() + " has more cells than its cardinality");
      }
    }
  }
  if (non_generic != activation_.size()) {
    fail("activation is not a permutation of the non-generic domains");
  }
}

}  // namespace refdom
