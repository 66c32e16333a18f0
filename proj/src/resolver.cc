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

#include "refdom/resolver.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "refdom/error.h"

namespace refdom {
namespace {

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool IsDefinite(DeterminerClass det) {
  return det == DeterminerClass::kDefinite ||
         det == DeterminerClass::kDefiniteOther;
}

bool IsIndefinite(DeterminerClass det) {
  return det == DeterminerClass::kIndefinite ||
         det == DeterminerClass::kNumeral;
}

// Scans the activation list once. Returns true when a domain was selected
// (first mode) or when the scan must stop.
bool Scan(const UnderspecifiedDomain &usd, const std::string &stage,
          Engine &engine, Selection &sel) {
  const ContextModel &ctx = engine.context;
  const MatchOptions match{engine.options.agreement};
  const bool report = engine.options.ambiguity == AmbiguityMode::kReport;
  const std::vector<DomainId> order = ctx.activation();
  for (const DomainId &id : order) {
    const ReferenceDomain &d = ctx.Get(id);
    Compatibility c = Compatible(usd, d, ctx, match);
    sel.steps.push_back({stage, id, c.pass, false, c.reason});
    if (c.pass) {
      if (report) {
        sel.passing.push_back(id);
        continue;
      }
      sel.domain = id;
      sel.binding = c.binding;
      sel.stage = stage;
      return true;
    }
    if (sel.fail_reason.empty()) sel.fail_reason = c.reason;
    if (usd.focus_required && d.partitioned() && c.reason == "focus") {
      sel.fail_reason = "focus";
      return true;
    }
  }
  return false;
}

std::string StepNote(size_t n, const char *what) {
  return std::to_string(n) + " " + what;
}

DomainId CloneGeneric(const UnderspecifiedDomain &usd, Engine &engine,
                      Selection &sel) {
  const Description desc = usd.type_constraint.value_or(Description{});
  const std::string type = desc.type.value_or(std::string(kTopType));
  DomainId generic =
      GenericDomain(engine.kb, engine.context, type, desc.properties);
  std::string tag = engine.context.MintTag(
      Upper(TagStem(engine.kb, type, desc.properties)), false);
  DomainId clone = engine.context.NewDomain(
      type, Cardinality::Unbounded(), desc.properties, Source::kConceptual, tag);
  sel.steps.push_back({"generic", clone, true, true, "clone of " + generic.str()});
  return clone;
}

}  // namespace

const char *VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kOk: return "OK";
    case Verdict::kSuboptimal: return "SUBOPTIMAL";
    case Verdict::kFail: return "FAIL";
    case Verdict::kUnresolved: return "UNRESOLVED";
  }
  return "?";
}

const char *GroupTriggerName(GroupTrigger trigger) {
  switch (trigger) {
    case GroupTrigger::kPreposition: return "preposition";
    case GroupTrigger::kCoordination: return "coordination";
    case GroupTrigger::kPredicate: return "predicate";
  }
  return "?";
}

Selection SelectDomain(const UnderspecifiedDomain &usd, Engine &engine) {
  Selection sel;
  const bool report = engine.options.ambiguity == AmbiguityMode::kReport;
  if (Scan(usd, "contextual", engine, sel) || report) {
    if (!sel.domain && sel.fail_reason.empty()) sel.fail_reason = "no-domain";
    return sel;
  }
  if (IsDefinite(usd.det)) {
    if (engine.scene) {
      std::vector<DomainId> made = PerceptualGroup(
          engine.context, *engine.scene, engine.kb, engine.options.grouping);
      for (const DomainId &id : made) {
        sel.steps.push_back({"perceptual", id, false, true, "grouped"});
      }
      if (!made.empty() && Scan(usd, "perceptual", engine, sel)) return sel;
    }
    const std::vector<DomainId> order = engine.context.activation();
    for (const DomainId &id : order) {
      const size_t before = engine.context.Get(id).partitions.size();
      std::optional<size_t> parts = PartPartition(engine.kb, engine.context, id);
      if (!parts || engine.context.Get(id).partitions.size() == before) continue;
      sel.steps.push_back({"bridging", id, false, true,
                           StepNote(engine.context.Get(id).partitions[*parts]
                                        .cells.size(),
                                    "parts")});
      if (Scan(usd, "bridging", engine, sel)) return sel;
    }
  } else if (IsIndefinite(usd.det)) {
    DomainId clone = CloneGeneric(usd, engine, sel);
    sel.domain = clone;
    sel.binding = Binding{};
    sel.stage = "generic";
    return sel;
  }
  if (sel.fail_reason.empty()) sel.fail_reason = "no-domain";
  return sel;
}

Restructured Restructure(const UnderspecifiedDomain &usd,
                         const DomainId &domain, const Binding &binding,
                         const Predicate &predicate, Engine &engine) {
  ContextModel &ctx = engine.context;
  const KnowledgeBase &kb = engine.kb;
  Restructured out;
  out.domain = domain;
  const std::string verb = predicate.verb.empty() ? "mention" : predicate.verb;
  const Description desc = usd.type_constraint.value_or(Description{});

  auto mint_referent = [&](const ReferenceDomain &from, int64_t count) {
    std::string type = from.type;
    if (desc.type && !ctx.types().IsSubtype(type, *desc.type)) type = *desc.type;
    Properties props = from.properties;
    for (const auto &[k, v] : desc.properties) props[k] = v;
    if (usd.agreement.gender) props["gender"] = *usd.agreement.gender;
    std::string tag = ctx.MintTag(TagStem(kb, type, props), true);
    return ctx.NewDomain(type, Cardinality::Exactly(count), std::move(props),
                         Source::kDiscourse, tag);
  };

  switch (usd.det) {
    case DeterminerClass::kIndefinite:
    case DeterminerClass::kNumeral: {
      const ReferenceDomain from = ctx.Get(domain);
      const int64_t n = usd.count;
      DomainId referent = mint_referent(from, n);
      Cardinality rest = from.cardinality.unbounded()
                             ? Cardinality::Unbounded()
                             : Cardinality::Exactly(from.cardinality.count() - n);
      DomainId residue =
          ctx.NewDomain(from.type, rest, from.properties, from.source,
                        ctx.MintTag(domain.tag() + ".others", true));
      Criterion criterion = Criterion::ByPredicate(verb, predicate.positive);
      size_t p = ctx.AddPartition(
          domain, criterion, {{verb, referent}, {"not " + verb, residue}});
      ctx.Profile(domain, p, 0);
      out.referent = referent;
      out.description = "new partition " + criterion.ToString() + " on " +
                        domain.str() + ": " + verb + "=" + referent.str() +
                        " | not " + verb + "=" + residue.str() + "; " +
                        referent.str() + " profiled";
      break;
    }
    case DeterminerClass::kIndefiniteAnother: {
      const ReferenceDomain from = ctx.Get(domain);
      const size_t p = *binding.partition;
      const std::optional<DomainId> before = from.partitions[p].ProfiledMember();
      DomainId referent = mint_referent(from, 1);
      std::set<std::string> used;
      for (const Cell &c : from.partitions[p].cells) used.insert(c.value);
      std::string value = verb;
      for (int k = 2; used.count(value); ++k) {
        value = verb + "#" + std::to_string(k);
      }
      size_t cell = ctx.AddCell(domain, p, {value, referent});
      ctx.Profile(domain, p, cell);
      out.referent = referent;
      out.description = "cell " + value + "=" + referent.str() + " added to " +
                        from.partitions[p].criterion.ToString() + " of " +
                        domain.str() + "; " + referent.str() + " profiled" +
                        (before ? " instead of " + before->str() : "");
      break;
    }
    case DeterminerClass::kDefinite:
    case DeterminerClass::kDefiniteOther: {
      const ReferenceDomain &d = ctx.Get(domain);
      const Partition &part = d.partitions[*binding.partition];
      if (binding.whole_domain) {
        out.referent = domain;
        out.description = domain.str() + " taken as a whole";
        break;
      }
      const bool again = part.profiled == binding.cell;
      out.referent = part.cells[*binding.cell].member;
      const std::string criterion = part.criterion.ToString();
      ctx.Profile(domain, *binding.partition, *binding.cell);
      out.verdict = again ? Verdict::kSuboptimal : Verdict::kOk;
      out.description = "profiled " + out.referent.str() + " in " + criterion +
                        " of " + domain.str() +
                        (again ? " (already profiled)" : "");
      break;
    }
    case DeterminerClass::kPronoun: {
      out.referent = *ctx.FocusedElement(domain);
      out.description = "none";
      break;
    }
    case DeterminerClass::kDemonstrative: {
      DomainId r = *ctx.FocusedElement(domain);
      const std::string type = usd.reclassify_as.value_or(ctx.Get(r).type);
      std::string tag = ctx.MintTag(Upper(TagStem(kb, type, {})), true);
      DomainId fresh = ctx.NewDomain(type, ctx.Get(r).cardinality, {},
                                     Source::kDiscourse, tag);
      size_t p = ctx.AddPartition(fresh, Criterion::ByType(), {{type, r}});
      ctx.Profile(fresh, p, 0);
      out.referent = r;
      out.domain = fresh;
      out.description = r.str() + " reclassified into new " + type +
                        " domain " + fresh.str();
      // The source domain keeps its place; the new domain heads the list.
      return out;
    }
  }
  ctx.Touch(out.domain);
  return out;
}

DomainId Group(GroupTrigger trigger, std::span<const DomainId> members,
               std::optional<size_t> prominent, const std::string &relation,
               ContextModel &context, const KnowledgeBase &kb) {
  if (members.size() < 2) {
    throw Error(ErrorCode::kInvariantViolation, "group needs two members");
  }
  std::vector<std::string> types;
  Cardinality card = context.Get(members[0]).cardinality;
  for (size_t i = 0; i < members.size(); ++i) {
    const ReferenceDomain &m = context.Get(members[i]);
    types.push_back(m.type);
    if (i > 0) card = card.Plus(m.cardinality);
  }
  auto distinct = [](const std::vector<std::string> &values) {
    std::set<std::string> seen;
    for (const std::string &v : values) {
      if (v.empty() || !seen.insert(v).second) return false;
    }
    return true;
  };

  Criterion criterion = Criterion::ByGroupRole(GroupTriggerName(trigger));
  std::vector<std::string> values;
  if (distinct(types)) {
    criterion = Criterion::ByType();
    values = types;
  } else {
    std::vector<std::pair<size_t, std::string>> names;
    std::set<std::string> seen;
    for (const DomainId &id : members) {
      for (const auto &[name, value] : context.Get(id).properties) {
        if (seen.insert(name).second) {
          names.emplace_back(kb.lexicon.PropertyRank(name), name);
        }
      }
    }
    std::sort(names.begin(), names.end());
    for (const auto &[rank, name] : names) {
      std::vector<std::string> vs;
      for (const DomainId &id : members) {
        const Properties &props = context.Get(id).properties;
        auto it = props.find(name);
        vs.push_back(it == props.end() ? std::string() : it->second);
      }
      if (distinct(vs)) {
        criterion = Criterion::ByProperty(name);
        values = std::move(vs);
        break;
      }
    }
    if (values.empty()) {
      for (size_t i = 0; i < members.size(); ++i) {
        values.push_back("m" + std::to_string(i + 1));
      }
    }
  }

  DomainId group =
      context.NewDomain(context.types().CommonSupertype(types), card, {},
                        Source::kDiscourse, context.MintTag("G", true));
  std::vector<Cell> cells;
  for (size_t i = 0; i < members.size(); ++i) {
    cells.push_back({values[i], members[i]});
  }
  size_t p = context.AddPartition(group, criterion, std::move(cells));
  if (prominent) context.Profile(group, p, *prominent);
  if (!relation.empty() && members.size() == 2 && prominent) {
    const size_t other = 1 - *prominent;
    size_t q = context.AddPartition(group, Criterion::ByPosition(relation),
                                    {{"trajector", members[*prominent]},
                                     {"landmark", members[other]}});
    context.Profile(group, q, 0);
  }
  return group;
}

Session::Session(std::shared_ptr<const KnowledgeBase> kb, EngineOptions options)
    : kb_(std::move(kb)), options_(std::move(options)),
      context_(kb_->hierarchy) {}

Engine Session::engine() {
  return Engine{context_, *kb_, scene_ ? &*scene_ : nullptr, options_};
}

void Session::LoadScene(Scene scene) {
  SeedScene(scene, context_);
  scene_ = std::move(scene);
  PerceptualGroup(context_, *scene_, *kb_, options_.grouping);
  if (options_.check_invariants) context_.CheckInvariants();
}

UtteranceResult Session::ProcessText(std::string_view text,
                                     UnknownTokenPolicy policy) {
  std::vector<Token> tokens = Tokenize(text, kb_->lexicon, policy);
  return Process(ParseUtterance(tokens));
}

UtteranceResult Session::Process(const Utterance &utterance) {
  UtteranceResult result;
  result.utterance = utterance;
  const size_t index = utterances_++;
  Engine eng = engine();
  const bool report = options_.ambiguity == AmbiguityMode::kReport;
  std::vector<std::optional<DomainId>> referents;

  for (size_t i = 0; i < utterance.args.size(); ++i) {
    const Argument &arg = utterance.args[i];
    Resolution r;
    r.utterance = index;
    r.argument = i;
    r.expr = arg.expr;
    r.usd = BuildUnderspecified(arg.expr, *kb_);
    std::set<DomainId> before;
    for (const auto &entry : context_.store()) before.insert(entry.first);
    std::optional<ContextModel> snapshot;
    if (observer_) snapshot = context_;
    Selection sel = SelectDomain(r.usd, eng);
    r.candidates = std::move(sel.steps);
    r.stage = sel.stage;
    r.passing = std::move(sel.passing);
    if (report) {
      r.verdict = r.passing.empty() ? Verdict::kFail : Verdict::kUnresolved;
      if (r.passing.empty()) r.fail_reason = sel.fail_reason;
    } else if (!sel.domain) {
      r.verdict = Verdict::kFail;
      r.fail_reason = sel.fail_reason;
    } else {
      Predicate predicate{utterance.verb, utterance.positive != arg.negated};
      Restructured done =
          Restructure(r.usd, *sel.domain, sel.binding, predicate, eng);
      r.selected = sel.domain;
      r.domain = done.domain;
      r.referent = done.referent;
      r.new_referent = before.count(done.referent) == 0;
      r.verdict = done.verdict;
      r.restructure = done.description;
      if (utterance.verb_state && predicate.positive &&
          context_.Get(done.referent).source == Source::kPerception &&
          context_.Get(done.referent).cardinality.IsOne()) {
        context_.SetProperty(done.referent, "state", *utterance.verb_state);
      }
    }
    if (observer_) observer_(r, *snapshot, context_);
    referents.push_back(r.referent);
    result.resolutions.push_back(std::move(r));
  }

  if (!report) {
    std::set<std::set<DomainId>> grouped;
    auto make = [&](GroupTrigger trigger, std::vector<DomainId> members,
                    std::optional<size_t> prominent,
                    const std::string &relation) {
      std::set<DomainId> key(members.begin(), members.end());
      if (key.size() < 2 || key.size() != members.size()) return;
      if (trigger == GroupTrigger::kPredicate && grouped.count(key)) return;
      grouped.insert(key);
      result.groups.push_back(
          Group(trigger, members, prominent, relation, context_, *kb_));
    };

    std::optional<size_t> first_core;
    for (size_t i = 0; i < utterance.args.size(); ++i) {
      if (utterance.args[i].core()) {
        first_core = i;
        break;
      }
    }
    for (size_t i = 0; i < utterance.args.size(); ++i) {
      const Argument &arg = utterance.args[i];
      if (!arg.pp || !referents[i]) continue;
      std::optional<size_t> head;
      if (arg.pp->anchor >= 0) {
        head = static_cast<size_t>(arg.pp->anchor);
      } else {
        head = first_core;
      }
      if (!head || *head == i || !referents[*head]) continue;
      const size_t prominent = arg.pp->prominent == Prominence::kHead ? 0 : 1;
      make(GroupTrigger::kPreposition, {*referents[*head], *referents[i]},
           prominent, arg.pp->relation);
    }
    for (const std::vector<size_t> &coordination : utterance.coordinations) {
      std::vector<DomainId> members;
      for (size_t i : coordination) {
        if (referents[i]) members.push_back(*referents[i]);
      }
      make(GroupTrigger::kCoordination, members, std::nullopt, "");
    }
    std::vector<DomainId> core;
    for (size_t i = 0; i < utterance.args.size(); ++i) {
      if (!utterance.args[i].core() || !referents[i]) continue;
      if (std::find(core.begin(), core.end(), *referents[i]) == core.end()) {
        core.push_back(*referents[i]);
      }
    }
    make(GroupTrigger::kPredicate, core, std::nullopt, "");
  }
  if (options_.check_invariants) context_.CheckInvariants();
  return result;
}

}  // namespace refdom
