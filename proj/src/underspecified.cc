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

#include "refdom/underspecified.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "refdom/error.h"

namespace refdom {
namespace {

Compatibility Fail(const char *reason) {
  Compatibility c;
  c.reason = reason;
  return c;
}

Compatibility Pass(Binding binding) {
  Compatibility c;
  c.pass = true;
  c.binding = binding;
  return c;
}

// Partition indices, most recently updated first.
std::vector<size_t> ByRecency(const ReferenceDomain &d) {
  std::vector<size_t> order(d.partitions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return d.partitions[a].stamp > d.partitions[b].stamp;
  });
  return order;
}

bool MemberSatisfies(const Cell &cell, const Description &desc,
                     const ContextModel &context) {
  return Satisfies(context.Get(cell.member), desc, context.types());
}

bool AnyMemberSatisfies(const ReferenceDomain &d, const Description &desc,
                        const ContextModel &context) {
  for (const Partition &p : d.partitions) {
    for (const Cell &c : p.cells) {
      if (MemberSatisfies(c, desc, context)) return true;
    }
  }
  return false;
}

// The single cell of `p` whose member is an individual satisfying `desc`.
std::optional<size_t> UniqueCell(const Partition &p, const Description &desc,
                                 const ContextModel &context,
                                 bool skip_profiled) {
  std::optional<size_t> found;
  for (size_t i = 0; i < p.cells.size(); ++i) {
    if (skip_profiled && p.profiled == i) continue;
    const ReferenceDomain &m = context.Get(p.cells[i].member);
    if (!m.cardinality.IsOne() || !Satisfies(m, desc, context.types())) {
      continue;
    }
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

bool PatternApplies(const CriterionPattern &pattern, const Criterion &c) {
  if (pattern.Matches(c)) return true;
  // Parts are told apart by their kind of thing.
  return pattern.kind == Criterion::Kind::kType &&
         c.kind == Criterion::Kind::kGroupRole;
}

bool AgreementHolds(const AgreementFeatures &features,
                    const ReferenceDomain &m) {
  if (features.gender) {
    auto it = m.properties.find("gender");
    if (it != m.properties.end() && it->second != *features.gender) {
      return false;
    }
  }
  if (features.number) {
    const bool singular = m.cardinality.IsOne();
    if (singular != (*features.number == Number::kSingular)) return false;
  }
  return true;
}

Compatibility SingularDefinite(const UnderspecifiedDomain &usd,
                               const ReferenceDomain &d,
                               const ContextModel &context) {
  const Description desc = usd.type_constraint.value_or(Description{});
  const CriterionPattern pattern =
      usd.partition.pattern.value_or(CriterionPattern{});
  const TypeHierarchy &types = context.types();
  if (desc.type) {
    const std::string &n = *desc.type;
    bool ok;
    if (pattern.kind == Criterion::Kind::kType) {
      ok = (n != d.type && types.IsSubtype(n, d.type)) ||
           AnyMemberSatisfies(d, desc, context);
    } else {
      ok = types.IsSubtype(n, d.type) || types.IsSubtype(d.type, n) ||
           AnyMemberSatisfies(d, desc, context);
    }
    if (!ok) return Fail("type");
  }
  if (!d.partitioned()) return Fail("partition");
  const std::vector<size_t> order = ByRecency(d);
  bool blocked_by_profile = false;
  for (size_t pi : order) {
    const Partition &p = d.partitions[pi];
    if (!usd.partition.pattern || PatternApplies(pattern, p.criterion)) {
      if (auto cell = UniqueCell(p, desc, context, usd.exclude_profiled)) {
        Binding b;
        b.partition = pi;
        b.cell = cell;
        return Pass(b);
      }
      if (usd.exclude_profiled && UniqueCell(p, desc, context, false)) {
        blocked_by_profile = true;
      }
    }
  }
  if (blocked_by_profile) return Fail("focus");
  if (usd.exclude_profiled) return Fail("partition");
  // The profiled member of an indefinite's predicate partition stands for
  // "the N" against "the other Ns".
  for (size_t pi : order) {
    const Partition &p = d.partitions[pi];
    if (p.criterion.kind != Criterion::Kind::kPredicate || !p.profiled) {
      continue;
    }
    if (!MemberSatisfies(p.cells[*p.profiled], desc, context)) continue;
    bool other = false;
    for (size_t i = 0; i < p.cells.size(); ++i) {
      if (i == *p.profiled) continue;
      const ReferenceDomain &m = context.Get(p.cells[i].member);
      if (m.cardinality.IsOne() && Satisfies(m, desc, types)) other = true;
    }
    if (other) continue;
    Binding b;
    b.partition = pi;
    b.cell = p.profiled;
    b.via_focus = true;
    return Pass(b);
  }
  return Fail("partition");
}

Compatibility PluralDefinite(const UnderspecifiedDomain &usd,
                             const ReferenceDomain &d,
                             const ContextModel &context) {
  const Description desc = usd.type_constraint.value_or(Description{});
  if (desc.type && !context.types().IsSubtype(d.type, *desc.type)) {
    return Fail("type");
  }
  if (!d.partitioned()) return Fail("partition");
  for (size_t pi : ByRecency(d)) {
    const Partition &p = d.partitions[pi];
    if (p.cells.size() < 2) continue;
    const bool all = std::all_of(p.cells.begin(), p.cells.end(),
                                 [&](const Cell &c) {
                                   return MemberSatisfies(c, desc, context);
                                 });
    if (!all) continue;
    Binding b;
    b.partition = pi;
    b.whole_domain = true;
    return Pass(b);
  }
  return Fail("partition");
}

Compatibility Focused(const UnderspecifiedDomain &usd, const ReferenceDomain &d,
                      const ContextModel &context,
                      const MatchOptions &options) {
  if (!d.partitioned()) return Fail("partition");
  std::optional<size_t> pi = context.FocusedPartition(d.id);
  if (!pi) return Fail("focus");
  const Partition &p = d.partitions[*pi];
  if (options.agreement && usd.det == DeterminerClass::kPronoun &&
      !AgreementHolds(usd.agreement, context.Get(*p.ProfiledMember()))) {
    return Fail("agreement");
  }
  Binding b;
  b.partition = pi;
  b.cell = p.profiled;
  return Pass(b);
}

Compatibility Another(const UnderspecifiedDomain &usd, const ReferenceDomain &d,
                      const ContextModel &context) {
  const Description desc = usd.type_constraint.value_or(Description{});
  if (!Satisfies(d, desc, context.types()) &&
      !AnyMemberSatisfies(d, desc, context)) {
    return Fail("type");
  }
  if (usd.min_cardinality && !d.cardinality.Covers(*usd.min_cardinality)) {
    return Fail("cardinality");
  }
  bool any_predicate = false;
  for (size_t pi : ByRecency(d)) {
    const Partition &p = d.partitions[pi];
    if (!usd.partition.pattern || !usd.partition.pattern->Matches(p.criterion)) {
      continue;
    }
    any_predicate = true;
    if (!d.cardinality.Covers(static_cast<int64_t>(p.cells.size()) + 1)) {
      continue;
    }
    for (size_t i = 0; i < p.cells.size(); ++i) {
      if (p.profiled == i) continue;
      if (MemberSatisfies(p.cells[i], desc, context)) {
        Binding b;
        b.partition = pi;
        return Pass(b);
      }
    }
  }
  return Fail(any_predicate ? "focus" : "partition");
}

}  // namespace

bool CriterionPattern::Matches(const Criterion &criterion) const {
  return criterion.kind == kind && (!name || *name == criterion.name);
}

std::string CriterionPattern::ToString() const {
  Criterion c{kind, name.value_or("*"), true};
  std::string s = c.ToString();
  if (kind == Criterion::Kind::kPredicate && !name) s = "ByPredicate(*)";
  return s;
}

bool Satisfies(const ReferenceDomain &domain, const Description &description,
               const TypeHierarchy &types) {
  if (description.type && !types.IsSubtype(domain.type, *description.type)) {
    return false;
  }
  return HasProperties(domain.properties, description.properties);
}

std::string UnderspecifiedDomain::ToString() const {
  std::string s = DeterminerClassName(det);
  if (type_constraint) {
    s += " type=" + type_constraint->type.value_or("*") +
         PropertiesToString(type_constraint->properties);
  }
  if (min_cardinality) s += " min=" + std::to_string(*min_cardinality);
  switch (partition.kind) {
    case PartitionRequirement::Kind::kNone:
      break;
    case PartitionRequirement::Kind::kVirtual:
      s += " virtual";
      break;
    case PartitionRequirement::Kind::kExisting:
      s += " existing(" +
           (partition.pattern ? partition.pattern->ToString() : "any") + ")";
      break;
  }
  if (focus_required) s += " focus";
  if (exclude_profiled) s += " exclude-profiled";
  if (reclassify_as) s += " reclassify=" + *reclassify_as;
  if (plural) s += " plural";
  if (count > 1) s += " count=" + std::to_string(count);
  return s;
}

UnderspecifiedDomain BuildUnderspecified(const RefExpr &expr,
                                         const KnowledgeBase &kb) {
  UnderspecifiedDomain u;
  u.det = expr.det;
  u.agreement = expr.agreement;
  u.plural = expr.number == Number::kPlural;
  Description desc{expr.head, expr.modifiers};
  using PK = PartitionRequirement::Kind;

  // First modifier in lexicon order, else the type.
  auto definite_pattern = [&]() {
    if (expr.modifiers.empty()) {
      return CriterionPattern{Criterion::Kind::kType, std::nullopt};
    }
    std::vector<std::pair<size_t, std::string>> ranked;
    for (const auto &[name, value] : expr.modifiers) {
      ranked.emplace_back(kb.lexicon.PropertyRank(name), name);
    }
    std::sort(ranked.begin(), ranked.end());
    return CriterionPattern{Criterion::Kind::kProperty, ranked.front().second};
  };

  switch (expr.det) {
    case DeterminerClass::kIndefinite:
    case DeterminerClass::kNumeral:
      u.type_constraint = desc;
      u.partition.kind = PK::kVirtual;
      u.count = expr.count;
      u.min_cardinality = expr.count + 1;
      u.plural = expr.count > 1;
      break;
    case DeterminerClass::kIndefiniteAnother:
      u.type_constraint = desc;
      u.partition = {PK::kExisting,
                     CriterionPattern{Criterion::Kind::kPredicate, std::nullopt}};
      u.exclude_profiled = true;
      u.min_cardinality = 2;
      break;
    case DeterminerClass::kDefinite:
    case DeterminerClass::kDefiniteOther:
      u.type_constraint = desc;
      u.partition = {PK::kExisting, definite_pattern()};
      if (expr.one_head && expr.modifiers.empty()) u.partition.pattern.reset();
      u.exclude_profiled = expr.det == DeterminerClass::kDefiniteOther;
      if (u.plural) u.partition.pattern.reset();
      break;
    case DeterminerClass::kPronoun:
      u.partition.kind = PK::kExisting;
      u.focus_required = true;
      break;
    case DeterminerClass::kDemonstrative:
      u.partition.kind = PK::kExisting;
      u.focus_required = true;
      u.reclassify_as = expr.head;
      break;
  }
  return u;
}

Compatibility Compatible(const UnderspecifiedDomain &usd,
                         const ReferenceDomain &domain,
                         const ContextModel &context,
                         const MatchOptions &options) {
  if (usd.focus_required) return Focused(usd, domain, context, options);
  if (usd.partition.kind == PartitionRequirement::Kind::kVirtual) {
    const Description desc = usd.type_constraint.value_or(Description{});
    if (!Satisfies(domain, desc, context.types())) return Fail("type");
    if (usd.min_cardinality && !domain.cardinality.Covers(*usd.min_cardinality)) {
      return Fail("cardinality");
    }
    return Pass(Binding{});
  }
  if (usd.det == DeterminerClass::kIndefiniteAnother) {
    return Another(usd, domain, context);
  }
  if (usd.plural) return PluralDefinite(usd, domain, context);
  return SingularDefinite(usd, domain, context);
}

Binding Unify(const UnderspecifiedDomain &usd, const ReferenceDomain &domain,
              const ContextModel &context, const MatchOptions &options) {
  Compatibility c = Compatible(usd, domain, context, options);
  if (!c.pass) {
    throw Error(ErrorCode::kInvariantViolation,
                "unify on incompatible " + domain.id.str() + " (" + c.reason +
                    ")");
  }
  return c.binding;
}

}  // namespace refdom
