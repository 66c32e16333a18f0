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

#include "properties.h"
#include "refdom/error.h"
#include "refdom/parser.h"

namespace refdom {
namespace {

using testing::LoadKb;

std::string Tokens(const std::string &text, const Lexicon &lex,
                   UnknownTokenPolicy policy = UnknownTokenPolicy::kFail) {
  std::string out;
  for (const Token &t : Tokenize(text, lex, policy)) {
    out += (out.empty() ? "" : " ") + t.ToString();
  }
  return out;
}

Utterance Parse(const std::string &text, const Lexicon &lex) {
  return ParseUtterance(Tokenize(text, lex));
}

TEST_CASE("tokenizing English") {
  auto kb = LoadKb("kb_en.json");
  const Lexicon &lex = kb->lexicon;
  CHECK(Tokens("take a big horizontal line", lex) ==
        "V:take DET:a ADJ:big ADJ:horizontal N:line");
  CHECK(Tokens("Don't stick it on the circle!", lex) ==
        "NEG:don't V:stick PRO:it P:on DET:the N:circle");
  CHECK(Tokens("put it on the top of the triangles", lex) ==
        "V:put PRO:it P:on the top of DET:the N:triangles");
  CHECK(Tokens("Yes.", lex).empty());
  CHECK(Tokens("", lex).empty());
  CHECK(Tokens("the red one", lex) == "DET:the ADJ:red ONE:one");
}

TEST_CASE("tokenizing French") {
  auto kb = LoadKb("kb_fr.json");
  const Lexicon &lex = kb->lexicon;
  CHECK(Tokens("tu ne la colles pas au rond hein", lex) ==
        "NEG:ne DET:la|PRO:la V:colles NEG:pas P:à DET:le|PRO:le N:rond");
  CHECK(Tokens("à gauche de ce rond", lex) == "P:à gauche de DET:ce N:rond");
  CHECK(Tokens("l\xE2\x80\x99un", lex, UnknownTokenPolicy::kSkip).empty());
}

TEST_CASE("unknown words") {
  auto kb = LoadKb("kb_en.json");
  const Lexicon &lex = kb->lexicon;
  try {
    Tokenize("take the zebra", lex);
    FAIL("no error thrown");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnknownToken);
    CHECK(std::string(e.what()).find("zebra") != std::string::npos);
  }
  CHECK(Tokens("take the zebra circle", lex, UnknownTokenPolicy::kSkip) ==
        "V:take DET:the N:circle");
}

TEST_CASE("an indefinite with modifiers") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("take a big horizontal line", kb->lexicon);
  CHECK(u.verb == "take");
  CHECK(u.verb_state == "taken");
  CHECK(u.positive);
  REQUIRE(u.args.size() == 1);
  const RefExpr &e = u.args[0].expr;
  CHECK(e.det == DeterminerClass::kIndefinite);
  CHECK(e.head == "LINE");
  CHECK(e.modifiers == Properties{{"size", "big"}, {"orientation", "horizontal"}});
  CHECK(e.surface == "a big horizontal line");
  CHECK(u.args[0].core());
}

TEST_CASE("a verb-attached prepositional phrase") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("and put it on the top of the triangles", kb->lexicon);
  REQUIRE(u.args.size() == 2);
  CHECK(u.args[0].expr.det == DeterminerClass::kPronoun);
  REQUIRE(u.args[1].pp.has_value());
  CHECK(u.args[1].pp->relation == "on-top-of");
  CHECK(u.args[1].pp->anchor == -1);
  CHECK(u.args[1].expr.number == Number::kPlural);
  CHECK(u.args[1].expr.det == DeterminerClass::kDefinite);
}

TEST_CASE("a negated coordination with one-anaphora") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("The green block supports the big pyramid but not the red one.",
                      kb->lexicon);
  REQUIRE(u.args.size() == 3);
  CHECK(u.args[0].pre_verbal);
  CHECK(u.verb == "support");
  CHECK(u.args[2].negated);
  CHECK(u.args[2].expr.one_head);
  CHECK_FALSE(u.args[2].expr.head.has_value());
  CHECK(u.args[2].expr.modifiers == Properties{{"color", "red"}});
  CHECK(u.coordinations == std::vector<std::vector<size_t>>{{1, 2}});
}

TEST_CASE("numerals, other, predicate adjectives") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("take two figures", kb->lexicon);
  CHECK(u.args[0].expr.det == DeterminerClass::kNumeral);
  CHECK(u.args[0].expr.count == 2);
  u = Parse("take the other circle", kb->lexicon);
  CHECK(u.args[0].expr.det == DeterminerClass::kDefiniteOther);
  u = Parse("the block is big", kb->lexicon);
  CHECK(u.predicate_modifiers == Properties{{"size", "big"}});
  u = Parse("the block supports nothing", kb->lexicon);
  CHECK_FALSE(u.positive);
  CHECK(u.args.size() == 1);
}

TEST_CASE("noun-attached phrases and fronted phrases") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("take the circle near the square", kb->lexicon);
  REQUIRE(u.args.size() == 2);
  CHECK(u.args[1].pp->anchor == 0);
  auto fr = LoadKb("kb_fr.json");
  u = Parse("et à gauche de ce rond tu vas prendre une petite barre", fr->lexicon);
  REQUIRE(u.args.size() == 2);
  CHECK(u.args[0].pp->fronted);
  CHECK(u.args[0].pp->relation == "left-of");
  CHECK(u.args[0].pp->anchor == 1);
  CHECK(u.args[0].expr.det == DeterminerClass::kDemonstrative);
  CHECK(u.args[1].expr.agreement.gender == "f");
}

TEST_CASE("la and le read as pronouns unless a noun follows") {
  auto kb = LoadKb("kb_fr.json");
  Utterance u = Parse("tu ne la colles pas au rond hein", kb->lexicon);
  REQUIRE(u.args.size() == 2);
  CHECK_FALSE(u.positive);
  CHECK(u.args[0].expr.det == DeterminerClass::kPronoun);
  CHECK(u.args[0].expr.agreement.gender == "f");
  CHECK(u.args[1].expr.det == DeterminerClass::kDefinite);
  CHECK(u.args[1].expr.head == "CIRCLE");
  u = Parse("prendre la rouge", kb->lexicon);
  CHECK(u.args[0].expr.det == DeterminerClass::kPronoun);
  CHECK(u.predicate_modifiers == Properties{{"color", "red"}});
}

TEST_CASE("parse errors name the position") {
  auto kb = LoadKb("kb_en.json");
  for (std::string bad : {"the circle", "take the", "take other circle",
                          "take the big red", "take a circle but"}) {
    CAPTURE(bad);
    try {
      Parse(bad, kb->lexicon);
      FAIL("no error thrown");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kNoParse);
    }
  }
}

TEST_CASE("rendering") {
  auto kb = LoadKb("kb_en.json");
  Utterance u = Parse("don't stick the little red one on top of them", kb->lexicon);
  CHECK(RenderUtterance(u, kb->lexicon) ==
        "don't stick the small red one on the top of they");
  auto fr = LoadKb("kb_fr.json");
  u = Parse("tu ne la colles pas au rond", fr->lexicon);
  CHECK(RenderUtterance(u, fr->lexicon) == "elle ne colles à le rond");
}

TEST_CASE("parse and render round trip") {
  for (const char *name : {"kb_en.json", "kb_fr.json"}) {
    auto report = testing::CheckRoundTrip(400, 41, LoadKb(name));
    INFO(name << " " << report.Summary());
    CHECK(report.ok());
  }
}

}  // namespace
}  // namespace refdom
