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

#include "refdom/parser.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "refdom/error.h"

namespace refdom {
namespace {

bool Contains(const std::vector<std::string> &list, const std::string &w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool WordChar(unsigned char c) { return c >= 0x80 || std::isalnum(c); }

std::vector<std::string> SplitWords(std::string_view raw) {
  std::string text;
  for (size_t i = 0; i < raw.size(); ++i) {
    // U+2019 right single quotation mark.
    if (raw.compare(i, 3, "\xE2\x80\x99") == 0) {
      text += '\'';
      i += 2;
      continue;
    }
    text += static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i])));
  }
  std::vector<std::string> words;
  std::string cur;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    bool keep = WordChar(c);
    if (!keep && (c == '\'' || c == '-')) {
      keep = !cur.empty() && i + 1 < text.size() &&
             WordChar(static_cast<unsigned char>(text[i + 1]));
    }
    if (keep) {
      cur += static_cast<char>(c);
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::vector<Reading> ReadingsFor(const std::string &w, const Lexicon &lex) {
  std::vector<Reading> out;
  if (const VerbEntry *v = lex.verbs.Find(w)) {
    Reading r;
    r.category = Category::kVerb;
    r.symbol = v->lemma;
    r.state = v->state;
    out.push_back(r);
  }
  if (const DeterminerWord *d = lex.determiners.Find(w)) {
    Reading r;
    r.category = Category::kDeterminer;
    r.determiner = *d;
    out.push_back(r);
  }
  if (const int *n = lex.numerals.Find(w)) {
    Reading r;
    r.category = Category::kNumeral;
    r.numeral = *n;
    out.push_back(r);
  }
  if (const AdjectiveEntry *a = lex.adjectives.Find(w)) {
    Reading r;
    r.category = Category::kAdjective;
    r.property = a->property;
    r.value = a->value;
    out.push_back(r);
  }
  if (const NounEntry *n = lex.nouns.Find(w)) {
    Reading r;
    r.category = Category::kNoun;
    r.symbol = n->type;
    r.number = n->number;
    r.features.gender = n->gender;
    out.push_back(r);
  }
  if (Contains(lex.one_words, w)) {
    Reading r;
    r.category = Category::kOne;
    out.push_back(r);
  }
  if (const AgreementFeatures *f = lex.pronouns.Find(w)) {
    Reading r;
    r.category = Category::kPronoun;
    r.features = *f;
    out.push_back(r);
  }
  if (const PrepositionEntry *p = lex.prepositions.Find(w)) {
    Reading r;
    r.category = Category::kPreposition;
    r.symbol = p->relation;
    r.prominent = p->prominent;
    r.attach = p->attach;
    out.push_back(r);
  }
  if (Contains(lex.conjunctions, w)) {
    Reading r;
    r.category = Category::kConjunction;
    out.push_back(r);
  }
  if (Contains(lex.negations, w)) {
    Reading r;
    r.category = Category::kNegation;
    out.push_back(r);
  }
  return out;
}

size_t WordCount(const std::string &s) {
  return 1 + static_cast<size_t>(std::count(s.begin(), s.end(), ' '));
}

template <typename T>
void MaxWords(const SurfaceTable<T> &table, size_t &n) {
  for (const auto &[surface, entry] : table.entries()) {
    n = std::max(n, WordCount(surface));
  }
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Utterance Parse() {
    Utterance u;
    while (At(Category::kConjunction)) ++pos_;
    // Pre-verbal material.
    std::vector<size_t> fronted;
    while (pos_ < tokens_.size() && !At(Category::kVerb)) {
      if (At(Category::kNegation)) {
        u.positive = false;
        ++pos_;
      } else if (At(Category::kPreposition)) {
        const Reading &p = *tokens_[pos_].Get(Category::kPreposition);
        ++pos_;
        Argument arg;
        arg.pre_verbal = true;
        arg.pp = PrepPhrase{p.symbol, p.prominent, p.attach, -1, true};
        arg.expr = ExpectArg();
        fronted.push_back(u.args.size());
        u.args.push_back(std::move(arg));
      } else if (StartsArg()) {
        Argument arg;
        arg.pre_verbal = true;
        arg.expr = ParseArg();
        u.args.push_back(std::move(arg));
      } else {
        Fail("expected a verb");
      }
    }
    if (pos_ == tokens_.size()) {
      if (tokens_.empty()) return u;
      Fail("expected a verb");
    }
    const Reading &verb = *tokens_[pos_].Get(Category::kVerb);
    u.verb = verb.symbol;
    u.verb_state = verb.state;
    ++pos_;

    std::optional<size_t> first_post_core;
    while (pos_ < tokens_.size()) {
      if (At(Category::kNegation)) {
        u.positive = false;
        ++pos_;
      } else if (At(Category::kPreposition)) {
        const Reading &p = *tokens_[pos_].Get(Category::kPreposition);
        ++pos_;
        Argument arg;
        int anchor = -1;
        if (p.attach == Attachment::kNoun && !u.args.empty()) {
          anchor = static_cast<int>(u.args.size()) - 1;
        }
        arg.pp = PrepPhrase{p.symbol, p.prominent, p.attach, anchor, false};
        arg.expr = ExpectArg();
        u.args.push_back(std::move(arg));
      } else if (At(Category::kConjunction)) {
        ++pos_;
        bool negated = false;
        while (At(Category::kNegation)) {
          negated = true;
          ++pos_;
        }
        if (u.args.empty() || u.args.back().pre_verbal) {
          Fail("conjunction without a preceding argument");
        }
        const size_t prev = u.args.size() - 1;
        Argument arg;
        arg.negated = negated;
        arg.pp = u.args[prev].pp;
        arg.expr = ExpectArg();
        u.args.push_back(std::move(arg));
        Coordinate(u, prev, u.args.size() - 1);
      } else if (StartsArg()) {
        Argument arg;
        arg.expr = ParseArg();
        if (!first_post_core) first_post_core = u.args.size();
        u.args.push_back(std::move(arg));
      } else if (At(Category::kAdjective)) {
        const Reading &a = *tokens_[pos_].Get(Category::kAdjective);
        u.predicate_modifiers[a.property] = a.value;
        ++pos_;
      } else {
        Fail("unexpected token");
      }
    }
    for (size_t i : fronted) {
      if (first_post_core) u.args[i].pp->anchor = static_cast<int>(*first_post_core);
    }
    return u;
  }

 private:
  bool At(Category c, size_t offset = 0) const {
    return pos_ + offset < tokens_.size() && tokens_[pos_ + offset].Is(c);
  }

  bool DeterminerAt(size_t offset) const {
    const size_t i = pos_ + offset;
    if (i >= tokens_.size()) return false;
    const Reading *d = tokens_[i].Get(Category::kDeterminer);
    return d != nullptr && d->determiner != DeterminerWord::kOther;
  }

  // True if a nominal starts at offset: numerals, adjectives and "other"
  // followed by a noun or "one".
  bool NominalAt(size_t offset) const {
    for (size_t i = pos_ + offset; i < tokens_.size(); ++i) {
      const Token &t = tokens_[i];
      if (t.Is(Category::kNoun) || t.Is(Category::kOne)) return true;
      const Reading *d = t.Get(Category::kDeterminer);
      const bool other = d != nullptr && d->determiner == DeterminerWord::kOther;
      if (!t.Is(Category::kNumeral) && !t.Is(Category::kAdjective) && !other) {
        return false;
      }
    }
    return false;
  }

  bool PronounHere() const {
    return At(Category::kPronoun) && !(DeterminerAt(0) && NominalAt(1));
  }

  bool StartsArg() const {
    return PronounHere() || DeterminerAt(0) ||
           (At(Category::kNumeral) && !At(Category::kPronoun));
  }

  RefExpr ExpectArg() {
    if (!StartsArg()) Fail("expected a referring expression");
    return ParseArg();
  }

  RefExpr ParseArg() {
    const size_t start = pos_;
    RefExpr e;
    if (PronounHere()) {
      e.det = DeterminerClass::kPronoun;
      e.agreement = tokens_[pos_].Get(Category::kPronoun)->features;
      if (e.agreement.number == Number::kPlural) e.number = Number::kPlural;
      ++pos_;
      e.surface = Surface(start);
      return e;
    }
    bool numeral_only = false;
    if (DeterminerAt(0)) {
      switch (tokens_[pos_].Get(Category::kDeterminer)->determiner) {
        case DeterminerWord::kIndefinite:
          e.det = DeterminerClass::kIndefinite;
          break;
        case DeterminerWord::kIndefiniteAnother:
          e.det = DeterminerClass::kIndefiniteAnother;
          break;
        case DeterminerWord::kDefinite:
          e.det = DeterminerClass::kDefinite;
          break;
        case DeterminerWord::kDemonstrative:
          e.det = DeterminerClass::kDemonstrative;
          break;
        case DeterminerWord::kOther:
          break;
      }
      ++pos_;
      const Reading *other = pos_ < tokens_.size()
                                 ? tokens_[pos_].Get(Category::kDeterminer)
                                 : nullptr;
      if (other && other->determiner == DeterminerWord::kOther) {
        if (e.det != DeterminerClass::kDefinite) Fail("\"other\" needs a definite");
        e.det = DeterminerClass::kDefiniteOther;
        ++pos_;
      }
    } else {
      e.det = DeterminerClass::kNumeral;
      numeral_only = true;
    }
    if (At(Category::kNumeral) &&
        (numeral_only || At(Category::kNoun, 1) || At(Category::kAdjective, 1))) {
      e.count = tokens_[pos_].Get(Category::kNumeral)->numeral;
      if (e.count > 1) e.number = Number::kPlural;
      ++pos_;
    }
    while (At(Category::kAdjective) && !At(Category::kNoun)) {
      const Reading &a = *tokens_[pos_].Get(Category::kAdjective);
      auto [it, fresh] = e.modifiers.emplace(a.property, a.value);
      if (!fresh && it->second != a.value) Fail("conflicting modifiers");
      ++pos_;
    }
    if (At(Category::kNoun)) {
      const Reading &n = *tokens_[pos_].Get(Category::kNoun);
      e.head = n.symbol;
      if (n.number == Number::kPlural) e.number = Number::kPlural;
      e.agreement.gender = n.features.gender;
      ++pos_;
    } else if (At(Category::kOne) && !numeral_only) {
      if (e.det != DeterminerClass::kDefinite &&
          e.det != DeterminerClass::kDefiniteOther) {
        Fail("\"one\" needs a definite determiner");
      }
      e.one_head = true;
      ++pos_;
    } else {
      Fail("expected a noun");
    }
    e.agreement.number = e.number;
    e.surface = Surface(start);
    return e;
  }

  void Coordinate(Utterance &u, size_t prev, size_t next) {
    for (std::vector<size_t> &group : u.coordinations) {
      if (group.back() == prev) {
        group.push_back(next);
        return;
      }
    }
    u.coordinations.push_back({prev, next});
  }

  std::string Surface(size_t start) const {
    std::string s;
    for (size_t i = start; i < pos_; ++i) {
      if (!s.empty()) s += ' ';
      s += tokens_[i].text;
    }
    return s;
  }

  [[noreturn]] void Fail(const std::string &what) const {
    std::string at = pos_ < tokens_.size() ? "\"" + tokens_[pos_].text + "\""
                                           : "end of input";
    throw Error(ErrorCode::kNoParse,
                what + " at token " + std::to_string(pos_) + " (" + at + ")");
  }

  std::span<const Token> tokens_;
  size_t pos_ = 0;
};

template <typename T, typename Pred>
std::string FirstSurface(const SurfaceTable<T> &table, Pred pred,
                         const char *what) {
  for (const auto &[surface, entry] : table.entries()) {
    if (pred(entry)) return surface;
  }
  throw Error(ErrorCode::kMalformedInput,
              std::string("lexicon has no surface for ") + what);
}

std::string FirstWord(const std::vector<std::string> &words, const char *what) {
  if (words.empty()) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("lexicon has no ") + what);
  }
  return words.front();
}

}  // namespace

const char *CategoryName(Category category) {
  switch (category) {
    case Category::kVerb: return "V";
    case Category::kDeterminer: return "DET";
    case Category::kNumeral: return "NUM";
    case Category::kAdjective: return "ADJ";
    case Category::kNoun: return "N";
    case Category::kOne: return "ONE";
    case Category::kPronoun: return "PRO";
    case Category::kPreposition: return "P";
    case Category::kConjunction: return "CONJ";
    case Category::kNegation: return "NEG";
  }
  return "?";
}

const char *DeterminerClassName(DeterminerClass det) {
  switch (det) {
    case DeterminerClass::kIndefinite: return "indefinite";
    case DeterminerClass::kIndefiniteAnother: return "indefinite-another";
    case DeterminerClass::kDefinite: return "definite";
    case DeterminerClass::kDefiniteOther: return "definite-other";
    case DeterminerClass::kDemonstrative: return "demonstrative";
    case DeterminerClass::kPronoun: return "pronoun";
    case DeterminerClass::kNumeral: return "numeral";
  }
  return "?";
}

const Reading *Token::Get(Category category) const {
  for (const Reading &r : readings) {
    if (r.category == category) return &r;
  }
  return nullptr;
}

std::string Token::ToString() const {
  std::string out;
  for (const Reading &r : readings) {
    if (!out.empty()) out += "|";
    out += std::string(CategoryName(r.category)) + ":" + text;
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon,
                            UnknownTokenPolicy policy) {
  std::vector<std::string> words;
  for (std::string &w : SplitWords(text)) {
    if (const std::string *exp = lexicon.contractions.Find(w)) {
      std::istringstream parts(*exp);
      std::string part;
      while (parts >> part) words.push_back(part);
    } else {
      words.push_back(std::move(w));
    }
  }
  size_t max_words = 1;
  MaxWords(lexicon.nouns, max_words);
  MaxWords(lexicon.adjectives, max_words);
  MaxWords(lexicon.determiners, max_words);
  MaxWords(lexicon.pronouns, max_words);
  MaxWords(lexicon.prepositions, max_words);
  MaxWords(lexicon.verbs, max_words);
  for (const auto *list : {&lexicon.negations, &lexicon.conjunctions,
                           &lexicon.fillers}) {
    for (const std::string &w : *list) max_words = std::max(max_words, WordCount(w));
  }

  std::vector<Token> tokens;
  size_t i = 0;
  while (i < words.size()) {
    bool matched = false;
    for (size_t n = std::min(max_words, words.size() - i); n >= 1; --n) {
      std::string phrase = words[i];
      for (size_t k = 1; k < n; ++k) phrase += " " + words[i + k];
      std::vector<Reading> readings = ReadingsFor(phrase, lexicon);
      if (!readings.empty()) {
        tokens.push_back({phrase, std::move(readings)});
      } else if (!Contains(lexicon.fillers, phrase)) {
        continue;
      }
      i += n;
      matched = true;
      break;
    }
    if (!matched) {
      if (policy == UnknownTokenPolicy::kFail) {
        throw Error(ErrorCode::kUnknownToken, "\"" + words[i] + "\"");
      }
      ++i;
    }
  }
  return tokens;
}

bool RefExpr::operator==(const RefExpr &o) const {
  return det == o.det && count == o.count && head == o.head &&
         one_head == o.one_head && modifiers == o.modifiers &&
         number == o.number && agreement == o.agreement;
}

Utterance ParseUtterance(std::span<const Token> tokens) {
  return Parser(tokens).Parse();
}

std::string RenderRefExpr(const RefExpr &e, const Lexicon &lex) {
  if (e.det == DeterminerClass::kPronoun) {
    // A surface that is also a determiner would read as one before a noun.
    std::optional<std::string> shared;
    for (const auto &[surface, f] : lex.pronouns.entries()) {
      if (!(f == e.agreement)) continue;
      if (!lex.determiners.Find(surface)) return surface;
      if (!shared) shared = surface;
    }
    if (shared) return *shared;
    return FirstSurface(lex.pronouns, [](const auto &) { return true; },
                        "pronouns");
  }
  std::vector<std::string> words;
  auto det_word = [&](DeterminerWord w) {
    words.push_back(FirstSurface(
        lex.determiners, [w](DeterminerWord d) { return d == w; },
        "a determiner class"));
  };
  switch (e.det) {
    case DeterminerClass::kIndefinite:
      det_word(DeterminerWord::kIndefinite);
      break;
    case DeterminerClass::kIndefiniteAnother:
      det_word(DeterminerWord::kIndefiniteAnother);
      break;
    case DeterminerClass::kDefinite:
      det_word(DeterminerWord::kDefinite);
      break;
    case DeterminerClass::kDefiniteOther:
      det_word(DeterminerWord::kDefinite);
      det_word(DeterminerWord::kOther);
      break;
    case DeterminerClass::kDemonstrative:
      det_word(DeterminerWord::kDemonstrative);
      break;
    case DeterminerClass::kNumeral:
    case DeterminerClass::kPronoun:
      break;
  }
  if (e.det == DeterminerClass::kNumeral || e.count > 1) {
    const int n = e.count;
    words.push_back(FirstSurface(lex.numerals, [n](int v) { return v == n; },
                                 "a numeral"));
  }
  std::vector<std::pair<size_t, std::string>> ranked;
  for (const auto &[property, value] : e.modifiers) {
    ranked.emplace_back(lex.PropertyRank(property), property);
  }
  std::stable_sort(ranked.begin(), ranked.end());
  for (const auto &[rank, property] : ranked) {
    const std::string &value = e.modifiers.at(property);
    words.push_back(FirstSurface(
        lex.adjectives,
        [&](const AdjectiveEntry &a) {
          return a.property == property && a.value == value;
        },
        "an adjective"));
  }
  if (e.one_head) {
    words.push_back(FirstWord(lex.one_words, "anaphoric head"));
  } else if (e.head) {
    words.push_back(FirstSurface(
        lex.nouns,
        [&](const NounEntry &n) {
          return n.type == *e.head && n.number == e.number &&
                 n.gender == e.agreement.gender;
        },
        "a noun"));
  }
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string RenderUtterance(const Utterance &u, const Lexicon &lex) {
  std::vector<std::string> words;
  auto prep = [&](const PrepPhrase &pp) {
    return FirstSurface(
        lex.prepositions,
        [&](const PrepositionEntry &p) {
          return p.relation == pp.relation && p.prominent == pp.prominent &&
                 p.attach == pp.attach;
        },
        "a preposition");
  };
  auto continues_coordination = [&](size_t i) {
    for (const std::vector<size_t> &g : u.coordinations) {
      auto it = std::find(g.begin(), g.end(), i);
      if (it != g.end() && it != g.begin()) return true;
    }
    return false;
  };
  size_t i = 0;
  for (; i < u.args.size() && u.args[i].pre_verbal; ++i) {
    if (u.args[i].pp) words.push_back(prep(*u.args[i].pp));
    words.push_back(RenderRefExpr(u.args[i].expr, lex));
  }
  if (u.verb.empty()) {
    std::string out;
    for (const std::string &w : words) out += (out.empty() ? "" : " ") + w;
    return out;
  }
  if (!u.positive) words.push_back(FirstWord(lex.negations, "negation"));
  words.push_back(FirstSurface(
      lex.verbs, [&](const VerbEntry &v) { return v.lemma == u.verb; }, "a verb"));
  for (; i < u.args.size(); ++i) {
    const Argument &arg = u.args[i];
    if (continues_coordination(i)) {
      words.push_back(FirstWord(lex.conjunctions, "conjunction"));
      if (arg.negated) words.push_back(FirstWord(lex.negations, "negation"));
    } else if (arg.pp) {
      words.push_back(prep(*arg.pp));
    }
    words.push_back(RenderRefExpr(arg.expr, lex));
  }
  std::vector<std::pair<size_t, std::string>> ranked;
  for (const auto &[property, value] : u.predicate_modifiers) {
    ranked.emplace_back(lex.PropertyRank(property), property);
  }
  std::stable_sort(ranked.begin(), ranked.end());
  for (const auto &[rank, property] : ranked) {
    const std::string &value = u.predicate_modifiers.at(property);
    words.push_back(FirstSurface(
        lex.adjectives,
        [&](const AdjectiveEntry &a) {
          return a.property == property && a.value == value;
        },
        "an adjective"));
  }
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace refdom
