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

#include "refdom/knowledge_base.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "refdom/error.h"

namespace refdom {
namespace {

using Json = nlohmann::ordered_json;

std::string Lower(std::string s) {
  for (char &c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

[[noreturn]] void Malformed(const std::string &what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const Json &Field(const Json &obj, const char *key) {
  if (!obj.is_object() || !obj.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

std::string StringField(const Json &obj, const char *key) {
  const Json &v = Field(obj, key);
  if (!v.is_string()) Malformed(std::string("\"") + key + "\" must be text");
  return v.get<std::string>();
}

Number ParseNumber(const std::string &s) {
  if (s == "singular" || s == "sg") return Number::kSingular;
  if (s == "plural" || s == "pl") return Number::kPlural;
  Malformed("unknown number \"" + s + "\"");
}

Cardinality ParseCount(const Json &v) {
  if (v.is_number_integer()) return Cardinality::Exactly(v.get<int64_t>());
  if (v.is_string() && v.get<std::string>() == "n") {
    return Cardinality::Unbounded();
  }
  Malformed("part count must be a positive integer or \"n\"");
}

std::vector<std::string> WordList(const Json &lex, const char *key) {
  std::vector<std::string> out;
  if (!lex.contains(key)) return out;
  const Json &list = lex.at(key);
  if (!list.is_array()) Malformed(std::string(key) + " must be a list");
  for (const Json &w : list) {
    if (!w.is_string()) Malformed(std::string(key) + " entries must be text");
    out.push_back(Lower(w.get<std::string>()));
  }
  return out;
}

const Json &Table(const Json &lex, const char *key, bool required) {
  static const Json kEmpty = Json::object();
  if (!lex.contains(key)) {
    if (required) Malformed(std::string("lexicon lacks \"") + key + "\"");
    return kEmpty;
  }
  const Json &t = lex.at(key);
  if (!t.is_object()) Malformed(std::string(key) + " must be an object");
  return t;
}

DeterminerWord ParseDeterminer(const std::string &s) {
  if (s == "indefinite") return DeterminerWord::kIndefinite;
  if (s == "indefinite-another") return DeterminerWord::kIndefiniteAnother;
  if (s == "definite") return DeterminerWord::kDefinite;
  if (s == "demonstrative") return DeterminerWord::kDemonstrative;
  if (s == "other") return DeterminerWord::kOther;
  Malformed("unknown determiner class \"" + s + "\"");
}

Lexicon ParseLexicon(const Json &lex, const TypeHierarchy &types) {
  Lexicon out;
  for (const auto &[surface, v] : Table(lex, "nouns", true).items()) {
    NounEntry e;
    if (v.is_string()) {
      e.type = v.get<std::string>();
    } else {
      e.type = StringField(v, "type");
      if (v.contains("number")) e.number = ParseNumber(StringField(v, "number"));
      if (v.contains("gender")) e.gender = StringField(v, "gender");
    }
    if (!types.Knows(e.type)) {
      throw Error(ErrorCode::kUnknownType, "noun \"" + surface + "\": " + e.type);
    }
    out.nouns.Add(Lower(surface), std::move(e));
  }
  for (const auto &[surface, v] : Table(lex, "adjectives", true).items()) {
    AdjectiveEntry e;
    if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) {
      e.property = v[0].get<std::string>();
      e.value = v[1].get<std::string>();
    } else {
      e.property = StringField(v, "property");
      e.value = StringField(v, "value");
    }
    out.adjectives.Add(Lower(surface), std::move(e));
  }
  for (const auto &[surface, v] : Table(lex, "determiners", true).items()) {
    if (!v.is_string()) Malformed("determiner \"" + surface + "\" needs a class");
    out.determiners.Add(Lower(surface), ParseDeterminer(v.get<std::string>()));
  }
  for (const auto &[surface, v] : Table(lex, "pronouns", true).items()) {
    AgreementFeatures f;
    if (v.is_object()) {
      if (v.contains("gender")) f.gender = StringField(v, "gender");
      if (v.contains("number")) f.number = ParseNumber(StringField(v, "number"));
    } else if (!v.is_null()) {
      Malformed("pronoun \"" + surface + "\" features must be an object");
    }
    out.pronouns.Add(Lower(surface), f);
  }
  for (const auto &[surface, v] : Table(lex, "prepositions", true).items()) {
    PrepositionEntry e;
    if (v.is_string()) {
      e.relation = v.get<std::string>();
    } else {
      e.relation = StringField(v, "relation");
      if (v.contains("prominent")) {
        std::string p = StringField(v, "prominent");
        if (p == "head") {
          e.prominent = Prominence::kHead;
        } else if (p == "complement") {
          e.prominent = Prominence::kComplement;
        } else {
          Malformed("prominent must be head or complement");
        }
      }
      if (v.contains("attach")) {
        std::string a = StringField(v, "attach");
        if (a == "verb") {
          e.attach = Attachment::kVerb;
        } else if (a == "noun") {
          e.attach = Attachment::kNoun;
        } else {
          Malformed("attach must be verb or noun");
        }
      }
    }
    out.prepositions.Add(Lower(surface), std::move(e));
  }
  for (const auto &[surface, v] : Table(lex, "verbs", true).items()) {
    VerbEntry e;
    if (v.is_string()) {
      e.lemma = v.get<std::string>();
    } else {
      e.lemma = StringField(v, "lemma");
      if (v.contains("state")) e.state = StringField(v, "state");
    }
    out.verbs.Add(Lower(surface), std::move(e));
  }
  for (const auto &[surface, v] : Table(lex, "numerals", false).items()) {
    if (!v.is_number_integer() || v.get<int>() < 1) {
      Malformed("numeral \"" + surface + "\" must be a positive integer");
    }
    out.numerals.Add(Lower(surface), v.get<int>());
  }
  for (const auto &[surface, v] : Table(lex, "contractions", false).items()) {
    if (!v.is_string()) Malformed("contraction \"" + surface + "\" must be text");
    out.contractions.Add(Lower(surface), Lower(v.get<std::string>()));
  }
  out.negations = WordList(lex, "negations");
  out.conjunctions = WordList(lex, "conjunctions");
  out.fillers = WordList(lex, "fillers");
  if (lex.contains("one_words")) out.one_words = WordList(lex, "one_words");
  return out;
}

}  // namespace

size_t Lexicon::PropertyRank(std::string_view property) const {
  std::vector<std::string_view> seen;
  for (const auto &[surface, adj] : adjectives.entries()) {
    if (adj.property == property) return seen.size();
    if (std::find(seen.begin(), seen.end(), adj.property) == seen.end()) {
      seen.push_back(adj.property);
    }
  }
  return seen.size();
}

KnowledgeBase ParseKnowledgeBase(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error &e) {
    Malformed(std::string("knowledge base is not JSON: ") + e.what());
  }
  std::vector<TypeNode> nodes;
  const Json &types = Field(root, "types");
  if (!types.is_array()) Malformed("\"types\" must be a list");
  for (const Json &t : types) {
    TypeNode node;
    node.name = StringField(t, "name");
    if (t.contains("parent") && !t.at("parent").is_null()) {
      node.parent = StringField(t, "parent");
    }
    if (t.contains("parts")) {
      const Json &parts = t.at("parts");
      if (!parts.is_array()) Malformed(node.name + ".parts must be a list");
      for (const Json &p : parts) {
        PartSpec spec;
        spec.role = StringField(p, "role");
        spec.type = StringField(p, "type");
        spec.count = p.contains("count") ? ParseCount(p.at("count"))
                                         : Cardinality::Exactly(1);
        node.parts.push_back(std::move(spec));
      }
    }
    nodes.push_back(std::move(node));
  }
  KnowledgeBase kb;
  kb.hierarchy =
      std::make_shared<const TypeHierarchy>(TypeHierarchy::Build(std::move(nodes)));
  kb.lexicon = ParseLexicon(Field(root, "lexicon"), *kb.hierarchy);
  return kb;
}

KnowledgeBase LoadKnowledgeBase(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseKnowledgeBase(buf.str());
}

std::string TagStem(const KnowledgeBase &kb, const std::string &type,
                    const Properties &props) {
  std::vector<std::pair<size_t, std::string>> ranked;
  for (const auto &[name, value] : props) {
    if (name == "gender" || name == "state") continue;
    ranked.emplace_back(kb.lexicon.PropertyRank(name), name);
  }
  std::stable_sort(ranked.begin(), ranked.end());
  std::string stem;
  auto initial = [&stem](const std::string &word) {
    for (char c : word) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        stem += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return;
      }
    }
  };
  for (const auto &[rank, name] : ranked) initial(props.at(name));
  initial(type);
  return stem.empty() ? "d" : stem;
}

DomainId GenericDomain(const KnowledgeBase &kb, ContextModel &context,
                       const std::string &type, const Properties &props) {
  if (!kb.types().Knows(type)) throw Error(ErrorCode::kUnknownType, type);
  if (auto found = context.FindGeneric(type, props)) return *found;
  std::string stem = TagStem(kb, type, props);
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return context.NewGenericDomain(type, props,
                                  context.MintTag("gen." + stem, false));
}

std::optional<size_t> PartPartition(const KnowledgeBase &kb,
                                    ContextModel &context,
                                    const DomainId &whole) {
  const ReferenceDomain &d = context.Get(whole);
  if (d.generic) return std::nullopt;
  const Criterion parts_criterion = Criterion::ByGroupRole("parts");
  for (size_t i = 0; i < d.partitions.size(); ++i) {
    if (d.partitions[i].criterion == parts_criterion) return i;
  }
  std::vector<PartSpec> parts = kb.types().PartsOf(d.type);
  if (parts.empty()) return std::nullopt;
  std::vector<Cell> cells;
  for (const PartSpec &part : parts) {
    std::string tag = context.MintTag(TagStem(kb, part.type, {}), true);
    DomainId member =
        context.NewDomain(part.type, part.count, {}, Source::kConceptual, tag);
    cells.push_back({part.role, member});
  }
  return context.AddPartition(whole, parts_criterion, std::move(cells));
}

}  // namespace refdom
