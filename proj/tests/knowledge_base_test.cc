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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "refdom/error.h"
#include "refdom/knowledge_base.h"
#include "test_support.h"

namespace refdom {
namespace {

using testing::LoadKb;

const char *kTiny = R"({
  "types": [{"name": "FIGURE"}, {"name": "CIRCLE", "parent": "FIGURE"}],
  "lexicon": {
    "nouns": {"circle": "CIRCLE", "circles": {"type": "CIRCLE", "number": "plural"}},
    "adjectives": {"red": ["color", "red"]},
    "determiners": {"a": "indefinite", "the": "definite"},
    "pronouns": {},
    "prepositions": {},
    "verbs": {"take": "take"}
  }
})";

ErrorCode ParseError(const std::string &text) {
  try {
    ParseKnowledgeBase(text);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kMalformedInput;
}

TEST_CASE("the English fixture loads") {
  auto kb = LoadKb("kb_en.json");
  const Lexicon &lex = kb->lexicon;
  REQUIRE(lex.nouns.Find("circles"));
  CHECK(lex.nouns.Find("circles")->type == "CIRCLE");
  CHECK(lex.nouns.Find("circles")->number == Number::kPlural);
  CHECK(lex.adjectives.Find("little")->value == "small");
  CHECK(*lex.determiners.Find("another") == DeterminerWord::kIndefiniteAnother);
  CHECK(lex.prepositions.Find("near")->attach == Attachment::kNoun);
  CHECK(lex.verbs.Find("takes")->state == "taken");
  CHECK(*lex.numerals.Find("three") == 3);
  CHECK(lex.one_words == std::vector<std::string>{"one"});
  CHECK(kb->types().IsSubtype("ROOF", "PART"));
}

TEST_CASE("the French fixture loads") {
  auto kb = LoadKb("kb_fr.json");
  const Lexicon &lex = kb->lexicon;
  CHECK(lex.nouns.Find("barre")->gender == "f");
  CHECK(*lex.contractions.Find("au") == "à le");
  CHECK(lex.pronouns.Find("la")->gender == "f");
  CHECK(*lex.determiners.Find("la") == DeterminerWord::kDefinite);
  CHECK(lex.one_words.empty());
}

TEST_CASE("a minimal knowledge base gets defaults") {
  KnowledgeBase kb = ParseKnowledgeBase(kTiny);
  CHECK(kb.lexicon.pronouns.entries().empty());
  CHECK(kb.lexicon.numerals.entries().empty());
  CHECK(kb.lexicon.negations.empty());
  CHECK(kb.lexicon.one_words == std::vector<std::string>{"one"});
  CHECK(kb.types().IsSubtype("CIRCLE", "FIGURE"));
}

TEST_CASE("bad knowledge bases are rejected") {
  CHECK(ParseError("{") == ErrorCode::kMalformedInput);
  CHECK(ParseError(R"({"types": []})") == ErrorCode::kMalformedInput);
  std::string no_verbs = kTiny;
  no_verbs.replace(no_verbs.find("\"verbs\""), 7, "\"verbz\"");
  CHECK(ParseError(no_verbs) == ErrorCode::kMalformedInput);
  std::string unknown_noun = kTiny;
  unknown_noun.replace(unknown_noun.find("\"CIRCLE\","), 9, "\"SQUARE\",");
  CHECK(ParseError(unknown_noun) == ErrorCode::kUnknownType);
  std::string bad_det = kTiny;
  bad_det.replace(bad_det.find("\"indefinite\""), 12, "\"sometimes\"");
  CHECK(ParseError(bad_det) == ErrorCode::kMalformedInput);
  std::string cycle = kTiny;
  cycle.replace(cycle.find(R"({"name": "FIGURE"})"), 18,
                R"({"name": "FIGURE", "parent": "CIRCLE"})");
  CHECK(ParseError(cycle) == ErrorCode::kCycle);
  CHECK_THROWS_AS(LoadKnowledgeBase("/nonexistent/kb.json"), Error);
}

TEST_CASE("property rank follows the adjective table") {
  auto kb = LoadKb("kb_en.json");
  const Lexicon &lex = kb->lexicon;
  CHECK(lex.PropertyRank("size") < lex.PropertyRank("color"));
  CHECK(lex.PropertyRank("color") < lex.PropertyRank("orientation"));
  CHECK(lex.PropertyRank("orientation") < lex.PropertyRank("unknown"));
}

TEST_CASE("tag stems") {
  auto kb = LoadKb("kb_en.json");
  CHECK(TagStem(*kb, "LINE", {{"size", "big"}, {"orientation", "horizontal"}}) ==
        "bhl");
  CHECK(TagStem(*kb, "CIRCLE", {{"size", "big"}}) == "bc");
  CHECK(TagStem(*kb, "BLOCK", {{"color", "red"}, {"state", "taken"}}) == "rb");
  CHECK(TagStem(*kb, "LINE", {{"gender", "f"}, {"size", "small"}}) == "sl");
}

TEST_CASE("generic domains are memoized") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  DomainId a = GenericDomain(*kb, ctx, "CIRCLE", {{"size", "big"}});
  DomainId b = GenericDomain(*kb, ctx, "CIRCLE", {{"size", "big"}});
  DomainId c = GenericDomain(*kb, ctx, "CIRCLE", {});
  CHECK(a == b);
  CHECK(a.str() == "@gen.BC");
  CHECK(c.str() == "@gen.C");
  CHECK(ctx.Get(a).generic);
  CHECK(ctx.activation().empty());
  CHECK_THROWS_AS(GenericDomain(*kb, ctx, "UNICORN", {}), Error);
}

TEST_CASE("house parts are materialized once") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  DomainId h = ctx.NewDomain("HOUSE", Cardinality::Exactly(1), {},
                             Source::kPerception, "h1");
  std::optional<size_t> p = PartPartition(*kb, ctx, h);
  REQUIRE(p.has_value());
  const Partition &parts = ctx.Get(h).partitions[*p];
  CHECK(parts.criterion == Criterion::ByGroupRole("parts"));
  REQUIRE(parts.cells.size() == 2);
  CHECK(parts.cells[0].value == "roof");
  CHECK(ctx.Get(parts.cells[0].member).type == "ROOF");
  CHECK(ctx.Get(parts.cells[0].member).cardinality == Cardinality::Exactly(1));
  CHECK(ctx.Get(parts.cells[1].member).cardinality.unbounded());
  const size_t size = ctx.store().size();
  CHECK(PartPartition(*kb, ctx, h) == p);
  CHECK(ctx.store().size() == size);
  ctx.CheckInvariants();

  DomainId m = ctx.NewDomain("MARBLE", Cardinality::Exactly(1), {},
                             Source::kDiscourse);
  CHECK_FALSE(PartPartition(*kb, ctx, m).has_value());
}

}  // namespace
}  // namespace refdom
