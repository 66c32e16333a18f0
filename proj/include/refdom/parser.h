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

// Lexicon-driven tokenizer and parser for task-dialogue utterances.
//
// Grammar (one clause per utterance, tokens classified by the lexicon):
//
//   UTT  := CONJ* PRE* VERB POST*
//   PRE  := NEG | PREP ARG | ARG            (fronted PP, subject, clitic)
//   POST := NEG | ADJ | ARG | PREP ARG | CONJ NEG* ARG
//   ARG  := PRO | DET [DET_other] [NUM] ADJ* (NOUN | ONE) | NUM ADJ* NOUN
//
// A PP following an argument attaches to that argument when the preposition
// is marked attach=noun, otherwise to the verb. A fronted PP attaches to the
// first post-verbal core argument. A word that is both a determiner and a
// pronoun ("la") is a determiner only when a nominal follows it.

#ifndef REFDOM_PARSER_H_
#define REFDOM_PARSER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refdom/domain.h"
#include "refdom/knowledge_base.h"

namespace refdom {

enum class Category {
  kVerb,
  kDeterminer,
  kNumeral,
  kAdjective,
  kNoun,
  kOne,
  kPronoun,
  kPreposition,
  kConjunction,
  kNegation,
};

const char *CategoryName(Category category);

// One lexicon classification of a token. Only the fields of its category
// are meaningful.
struct Reading {
  Category category = Category::kNoun;
  std::string symbol;  // noun type, verb lemma or preposition relation
  std::string property;
  std::string value;
  DeterminerWord determiner = DeterminerWord::kDefinite;
  int numeral = 0;
  Number number = Number::kSingular;
  AgreementFeatures features;  // pronoun features, noun gender
  Prominence prominent = Prominence::kHead;
  Attachment attach = Attachment::kVerb;
  std::optional<std::string> state;
};

struct Token {
  std::string text;
  std::vector<Reading> readings;

  const Reading *Get(Category category) const;
  bool Is(Category category) const { return Get(category) != nullptr; }
  // "V:take", "DET:a", ... one entry per reading joined by "|".
  std::string ToString() const;
};

enum class UnknownTokenPolicy { kFail, kSkip };

// Lowercases (ASCII), strips punctuation other than word-internal
// apostrophes and hyphens, expands contractions, joins multiword lexicon
// entries (longest match) and drops fillers. Throws kUnknownToken under
// kFail.
std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon,
                            UnknownTokenPolicy policy = UnknownTokenPolicy::kFail);

enum class DeterminerClass {
  kIndefinite,
  kIndefiniteAnother,
  kDefinite,
  kDefiniteOther,
  kDemonstrative,
  kPronoun,
  kNumeral,
};

const char *DeterminerClassName(DeterminerClass det);

struct RefExpr {
  DeterminerClass det = DeterminerClass::kDefinite;
  // Numeral value for kNumeral and for definites with a numeral.
  int count = 1;
  // Head type; absent for pronouns and for the anaphoric head "one".
  std::optional<std::string> head;
  bool one_head = false;
  Properties modifiers;
  Number number = Number::kSingular;
  AgreementFeatures agreement;
  // Surface text as written; not part of equality.
  std::string surface;

  bool operator==(const RefExpr &other) const;
};

struct PrepPhrase {
  std::string relation;
  Prominence prominent = Prominence::kHead;
  Attachment attach = Attachment::kVerb;
  // Index of the argument the phrase complements; -1 for the verb.
  int anchor = -1;
  bool fronted = false;

  bool operator==(const PrepPhrase &) const = default;
};

struct Argument {
  RefExpr expr;
  bool pre_verbal = false;
  // Introduced by a negated coordination ("but not the red one").
  bool negated = false;
  std::optional<PrepPhrase> pp;

  bool operator==(const Argument &) const = default;
  bool core() const { return !pp.has_value(); }
};

struct Utterance {
  std::string verb;  // lemma; empty for verbless lines such as "yes"
  std::optional<std::string> verb_state;
  bool positive = true;
  std::vector<Argument> args;
  // Groups of argument indices joined by a conjunction.
  std::vector<std::vector<size_t>> coordinations;
  // Predicative adjectives ("is big").
  Properties predicate_modifiers;

  bool operator==(const Utterance &) const = default;
};

// Throws kNoParse naming the failing token position.
Utterance ParseUtterance(std::span<const Token> tokens);

// Canonical surface form: first lexicon surface for every item.
std::string RenderUtterance(const Utterance &utterance, const Lexicon &lexicon);
std::string RenderRefExpr(const RefExpr &expr, const Lexicon &lexicon);

}  // namespace refdom

#endif  // REFDOM_PARSER_H_
