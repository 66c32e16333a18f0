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

// Reference resolution by domain selection and restructuring, discursive
// grouping, and the per-dialogue session that strings them together.

#ifndef REFDOM_RESOLVER_H_
#define REFDOM_RESOLVER_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refdom/context.h"
#include "refdom/domain.h"
#include "refdom/knowledge_base.h"
#include "refdom/parser.h"
#include "refdom/scene.h"
#include "refdom/underspecified.h"

namespace refdom {

// kUnresolved is only produced in ambiguity report mode.
enum class Verdict { kOk, kSuboptimal, kFail, kUnresolved };

const char *VerdictName(Verdict verdict);

enum class AmbiguityMode { kFirst, kReport };

struct EngineOptions {
  GroupingParams grouping;
  bool agreement = false;
  AmbiguityMode ambiguity = AmbiguityMode::kFirst;
  // Verify the context invariants after every utterance.
  bool check_invariants = true;
};

// What an engine operation works on. The scene is optional.
struct Engine {
  ContextModel &context;
  const KnowledgeBase &kb;
  const Scene *scene = nullptr;
  const EngineOptions &options;
};

struct CandidateStep {
  // "contextual", "perceptual", "bridging" or "generic".
  std::string stage;
  DomainId domain;
  bool pass = false;
  // The step records an accommodation (grouping, parts) rather than a test.
  bool action = false;
  // Fail reason, or what the action did.
  std::string reason;
};

struct Selection {
  std::optional<DomainId> domain;
  Binding binding;
  std::string stage;
  std::vector<CandidateStep> steps;
  std::string fail_reason;
  // Every passing contextual domain (report mode only).
  std::vector<DomainId> passing;
};

// Walks the activation list, most activated first, and falls back on
// perceptual grouping and bridging (definites) or on a clone of the
// generic domain (indefinites and numerals).
//
// A pronoun or demonstrative stops at the first partitioned domain: if that
// domain has no focus the expression fails. With agreement on, a focused
// domain whose focus disagrees is passed over.
Selection SelectDomain(const UnderspecifiedDomain &usd, Engine &engine);

struct Predicate {
  std::string verb;
  bool positive = true;
};

struct Restructured {
  DomainId referent;
  // Domain in which the referent ends up profiled.
  DomainId domain;
  Verdict verdict = Verdict::kOk;
  std::string description;
};

// Applies the determiner's restructuring operation to a selected domain and
// moves the resulting domain to the head of the activation list.
Restructured Restructure(const UnderspecifiedDomain &usd,
                         const DomainId &domain, const Binding &binding,
                         const Predicate &predicate, Engine &engine);

enum class GroupTrigger { kPreposition, kCoordination, kPredicate };

const char *GroupTriggerName(GroupTrigger trigger);

// Creates a complex domain over `members` (at least two, distinct). The
// first partition opposes the members by type, else by their first
// distinguishing property, else by role. With a relation, a second
// ByPosition partition opposes trajector and landmark (two members only).
// The prominent member, if any, is profiled in every partition.
DomainId Group(GroupTrigger trigger, std::span<const DomainId> members,
               std::optional<size_t> prominent, const std::string &relation,
               ContextModel &context, const KnowledgeBase &kb);

struct Resolution {
  size_t utterance = 0;
  size_t argument = 0;
  RefExpr expr;
  UnderspecifiedDomain usd;
  std::vector<CandidateStep> candidates;
  std::string stage;
  std::optional<DomainId> selected;
  std::optional<DomainId> domain;
  std::optional<DomainId> referent;
  // The referent did not exist before this resolution.
  bool new_referent = false;
  Verdict verdict = Verdict::kFail;
  std::string fail_reason;
  std::string restructure;
  std::vector<DomainId> passing;
};

struct UtteranceResult {
  Utterance utterance;
  std::vector<Resolution> resolutions;
  std::vector<DomainId> groups;
};

class Session {
 public:
  explicit Session(std::shared_ptr<const KnowledgeBase> kb,
                   EngineOptions options = {});

  // Seeds the scene's entities and groups them perceptually.
  void LoadScene(Scene scene);

  // Resolves the arguments left to right, then groups: one group per PP,
  // one per coordination, and one for the core arguments of the predicate.
  UtteranceResult Process(const Utterance &utterance);
  UtteranceResult ProcessText(std::string_view text,
                              UnknownTokenPolicy policy = UnknownTokenPolicy::kFail);

  // Called after each resolution with the context as it was before the
  // resolution and as it is now, ahead of any grouping. Setting an observer
  // makes every resolution copy the context.
  using Observer = std::function<void(const Resolution &, const ContextModel &,
                                      const ContextModel &)>;
  void SetObserver(Observer observer) { observer_ = std::move(observer); }

  const ContextModel &context() const { return context_; }
  const KnowledgeBase &kb() const { return *kb_; }
  const EngineOptions &options() const { return options_; }
  size_t utterance_count() const { return utterances_; }

 private:
  Engine engine();

  std::shared_ptr<const KnowledgeBase> kb_;
  EngineOptions options_;
  ContextModel context_;
  std::optional<Scene> scene_;
  size_t utterances_ = 0;
  Observer observer_;
};

}  // namespace refdom

#endif  // REFDOM_RESOLVER_H_
