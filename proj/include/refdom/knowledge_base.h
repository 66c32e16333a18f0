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

// Conceptual knowledge: the type hierarchy with part-whole structure, the
// surface lexicon, and the generic domains derived from them.

#ifndef REFDOM_KNOWLEDGE_BASE_H_
#define REFDOM_KNOWLEDGE_BASE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refdom/context.h"
#include "refdom/domain.h"
#include "refdom/type_hierarchy.h"

namespace refdom {

enum class Number { kSingular, kPlural };

enum class DeterminerWord {
  kIndefinite,
  kIndefiniteAnother,
  kDefinite,
  kDemonstrative,
  kOther,  // "other" following a definite article
};

// Which side of a relational predication is prominent (the trajector).
enum class Prominence { kHead, kComplement };

// Where a prepositional phrase attaches when it follows an argument.
enum class Attachment { kVerb, kNoun };

struct NounEntry {
  std::string type;
  Number number = Number::kSingular;
  std::optional<std::string> gender;
};

struct AdjectiveEntry {
  std::string property;
  std::string value;
};

struct AgreementFeatures {
  std::optional<std::string> gender;
  std::optional<Number> number;

  bool operator==(const AgreementFeatures &) const = default;
};

struct PrepositionEntry {
  std::string relation;
  Prominence prominent = Prominence::kHead;
  Attachment attach = Attachment::kVerb;
};

struct VerbEntry {
  std::string lemma;
  // State value given to perceived entities the verb applies to.
  std::optional<std::string> state;
};

// Insertion-ordered surface table.
template <typename T>
class SurfaceTable {
 public:
  void Add(std::string surface, T entry) {
    index_[surface] = entries_.size();
    entries_.emplace_back(std::move(surface), std::move(entry));
  }
  const T *Find(std::string_view surface) const {
    auto it = index_.find(surface);
    return it == index_.end() ? nullptr : &entries_[it->second].second;
  }
  const std::vector<std::pair<std::string, T>> &entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, T>> entries_;
  std::map<std::string, size_t, std::less<>> index_;
};

struct Lexicon {
  SurfaceTable<NounEntry> nouns;
  SurfaceTable<AdjectiveEntry> adjectives;
  SurfaceTable<DeterminerWord> determiners;
  SurfaceTable<AgreementFeatures> pronouns;
  SurfaceTable<PrepositionEntry> prepositions;
  SurfaceTable<VerbEntry> verbs;
  SurfaceTable<int> numerals;
  // Surface -> replacement words, e.g. "au" -> "à le".
  SurfaceTable<std::string> contractions;
  std::vector<std::string> negations;
  std::vector<std::string> conjunctions;
  std::vector<std::string> fillers;
  std::vector<std::string> one_words{"one"};

  // Position of a property name in the adjective table; names that never
  // occur there rank after all others.
  size_t PropertyRank(std::string_view property) const;
};

struct KnowledgeBase {
  std::shared_ptr<const TypeHierarchy> hierarchy;
  Lexicon lexicon;

  const TypeHierarchy &types() const { return *hierarchy; }
};

// Parses the JSON knowledge-base format and validates it.
KnowledgeBase ParseKnowledgeBase(std::string_view json_text);
KnowledgeBase LoadKnowledgeBase(const std::filesystem::path &path);

// Tag stem for domains of `type` with `props`: the initials of the property
// values in lexicon order followed by the initial of the type, lower case.
// "big" "horizontal" LINE -> "bhl".
std::string TagStem(const KnowledgeBase &kb, const std::string &type,
                    const Properties &props);

// Memoized generic domain of `type` restricted to `props`. Throws
// kUnknownType.
DomainId GenericDomain(const KnowledgeBase &kb, ContextModel &context,
                       const std::string &type, const Properties &props);

// Materializes the declared parts of `whole` as member domains and a
// ByGroupRole("parts") partition on it. Returns the existing partition if
// one was materialized before, and nullopt if the type has no parts.
std::optional<size_t> PartPartition(const KnowledgeBase &kb,
                                    ContextModel &context,
                                    const DomainId &whole);

}  // namespace refdom

#endif  // REFDOM_KNOWLEDGE_BASE_H_
