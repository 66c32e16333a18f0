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

#include "refdom/harness.h"

#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "refdom/error.h"
#include "refdom/trace.h"

namespace refdom {
namespace {

using Json = nlohmann::json;

[[noreturn]] void Malformed(const std::string &what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

Verdict ParseVerdict(const std::string &s) {
  if (s == "OK") return Verdict::kOk;
  if (s == "SUBOPTIMAL") return Verdict::kSuboptimal;
  if (s == "FAIL") return Verdict::kFail;
  Malformed("unknown verdict \"" + s + "\"");
}

size_t Index(const Json &v, const char *what) {
  if (!v.is_number_unsigned()) Malformed(std::string(what) + " must be >= 0");
  return v.get<size_t>();
}

const Resolution &At(const std::vector<UtteranceResult> &results, size_t u,
                     size_t a) {
  if (u >= results.size() || a >= results[u].resolutions.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "no argument " + std::to_string(a) + " in utterance " +
                    std::to_string(u));
  }
  return results[u].resolutions[a];
}

std::string Referent(const Resolution &r) {
  return r.referent ? r.referent->str() : "none";
}

struct Loaded {
  std::shared_ptr<const KnowledgeBase> kb;
  std::optional<Scene> scene;
  std::vector<DialogueLine> lines;
};

Loaded Load(const RunConfig &config) {
  Loaded l;
  l.kb = std::make_shared<const KnowledgeBase>(
      ParseKnowledgeBase(ReadTextFile(config.kb)));
  if (config.scene) {
    l.scene = ParseScene(ReadTextFile(*config.scene), l.kb->types());
  }
  l.lines = ParseDialogue(ReadTextFile(config.dialogue));
  return l;
}

}  // namespace

std::vector<DialogueLine> ParseDialogue(std::string_view text) {
  static const std::regex kSpeaker(R"(^\s*[A-Za-z]+[0-9]*'*\s*:\s*)");
  std::vector<DialogueLine> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  for (size_t n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back({n, std::regex_replace(line, kSpeaker, "",
                                           std::regex_constants::format_first_only)});
  }
  return lines;
}

std::string Expectation::ToString() const {
  std::string at = "u" + std::to_string(utterance) + ".a" + std::to_string(argument);
  switch (kind) {
    case Kind::kReferent:
      return at + " referent " + referent;
    case Kind::kCoreferent:
      return at + " coreferent with u" + std::to_string(other_utterance) +
             ".a" + std::to_string(other_argument);
    case Kind::kNewReferent:
      return at + " new referent";
    case Kind::kVerdict:
      return at + " verdict " + VerdictName(verdict);
  }
  return at;
}

std::vector<Expectation> ParseGold(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error &e) {
    Malformed(std::string("gold: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("expectations") ||
      !doc["expectations"].is_array()) {
    Malformed("gold: missing \"expectations\" list");
  }
  std::vector<Expectation> out;
  for (const Json &item : doc["expectations"]) {
    if (!item.is_object() || !item.contains("utt") || !item.contains("arg") ||
        !item.contains("expect")) {
      Malformed("gold: expectation needs utt, arg and expect");
    }
    Expectation e;
    e.utterance = Index(item["utt"], "utt");
    e.argument = Index(item["arg"], "arg");
    const Json &x = item["expect"];
    if (x == "new-referent") {
      e.kind = Expectation::Kind::kNewReferent;
    } else if (x.is_object() && x.contains("referent") && x["referent"].is_string()) {
      e.kind = Expectation::Kind::kReferent;
      e.referent = x["referent"].get<std::string>();
    } else if (x.is_object() && x.contains("coreferent_with") &&
               x["coreferent_with"].is_array() && x["coreferent_with"].size() == 2) {
      e.kind = Expectation::Kind::kCoreferent;
      e.other_utterance = Index(x["coreferent_with"][0], "coreferent_with");
      e.other_argument = Index(x["coreferent_with"][1], "coreferent_with");
    } else if (x.is_object() && x.contains("verdict") && x["verdict"].is_string()) {
      e.kind = Expectation::Kind::kVerdict;
      e.verdict = ParseVerdict(x["verdict"].get<std::string>());
    } else {
      Malformed("gold: unknown expectation " + x.dump());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Malformed("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<UtteranceResult> RunDialogue(std::shared_ptr<const KnowledgeBase> kb,
                                         const std::optional<Scene> &scene,
                                         const std::vector<DialogueLine> &lines,
                                         const EngineOptions &options,
                                         UnknownTokenPolicy unknown_tokens) {
  Session session(std::move(kb), options);
  if (scene) session.LoadScene(*scene);
  std::vector<UtteranceResult> results;
  for (const DialogueLine &line : lines) {
    try {
      results.push_back(session.ProcessText(line.text, unknown_tokens));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUnknownToken && e.code() != ErrorCode::kNoParse) {
        throw;
      }
      throw Error(e.code(), "dialogue line " + std::to_string(line.line_number) +
                                ": " + e.what());
    }
  }
  return results;
}

bool CheckExpectation(const Expectation &e,
                      const std::vector<UtteranceResult> &results,
                      std::string *detail) {
  const Resolution &r = At(results, e.utterance, e.argument);
  bool ok = false;
  std::string got;
  switch (e.kind) {
    case Expectation::Kind::kReferent:
      ok = r.referent && r.referent->str() == e.referent;
      got = "referent " + Referent(r);
      break;
    case Expectation::Kind::kCoreferent: {
      const Resolution &o = At(results, e.other_utterance, e.other_argument);
      ok = r.referent && o.referent && *r.referent == *o.referent;
      got = "referents " + Referent(r) + " and " + Referent(o);
      break;
    }
    case Expectation::Kind::kNewReferent:
      ok = r.referent && r.new_referent;
      got = "referent " + Referent(r) + (r.new_referent ? " (new)" : " (old)");
      break;
    case Expectation::Kind::kVerdict:
      ok = r.verdict == e.verdict;
      got = std::string("verdict ") + VerdictName(r.verdict);
      break;
  }
  if (detail) *detail = got;
  return ok;
}

int RunResolve(const RunConfig &config, std::ostream &out, std::ostream &err) {
  std::vector<UtteranceResult> results;
  try {
    Loaded l = Load(config);
    results = RunDialogue(l.kb, l.scene, l.lines, config.engine,
                          config.unknown_tokens);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  bool failed = false;
  for (const UtteranceResult &u : results) {
    for (const Resolution &r : u.resolutions) {
      if (config.trace == TraceFormat::kJson) {
        out << TraceJson(r) << "\n";
      } else {
        out << TraceText(r);
      }
      failed = failed || r.verdict == Verdict::kFail;
    }
  }
  return failed ? 2 : 0;
}

int RunCheck(const RunConfig &config, const std::filesystem::path &gold,
             std::ostream &out, std::ostream &err) {
  std::vector<UtteranceResult> results;
  std::vector<Expectation> expectations;
  try {
    Loaded l = Load(config);
    expectations = ParseGold(ReadTextFile(gold));
    results = RunDialogue(l.kb, l.scene, l.lines, config.engine,
                          config.unknown_tokens);
    for (const Expectation &e : expectations) {
      At(results, e.utterance, e.argument);
      if (e.kind == Expectation::Kind::kCoreferent) {
        At(results, e.other_utterance, e.other_argument);
      }
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  size_t passed = 0;
  for (const Expectation &e : expectations) {
    std::string detail;
    const bool ok = CheckExpectation(e, results, &detail);
    passed += ok ? 1 : 0;
    out << (ok ? "pass " : "FAIL ") << e.ToString() << ": " << detail << "\n";
  }
  out << passed << "/" << expectations.size() << " expectations hold\n";
  return passed == expectations.size() ? 0 : 2;
}

}  // namespace refdom
