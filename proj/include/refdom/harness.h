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

// Dialogue replay and gold checking behind the command-line tool.

#ifndef REFDOM_HARNESS_H_
#define REFDOM_HARNESS_H_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refdom/resolver.h"

namespace refdom {

struct DialogueLine {
  size_t line_number = 0;  // 1-based, in the file
  std::string text;        // speaker prefix removed
};

// One utterance per line. Blank lines and lines starting with '#' are
// skipped; a leading speaker prefix such as "A2'':" is removed.
std::vector<DialogueLine> ParseDialogue(std::string_view text);

struct Expectation {
  enum class Kind { kReferent, kCoreferent, kNewReferent, kVerdict };
  Kind kind = Kind::kVerdict;
  size_t utterance = 0;
  size_t argument = 0;
  std::string referent;  // "@bc1"
  size_t other_utterance = 0;
  size_t other_argument = 0;
  Verdict verdict = Verdict::kOk;

  std::string ToString() const;
};

// {"expectations":[{"utt":0,"arg":0,"expect":...}]} where expect is
// {"referent":"@x"}, {"coreferent_with":[u,a]}, "new-referent" or
// {"verdict":"OK|SUBOPTIMAL|FAIL"}.
std::vector<Expectation> ParseGold(std::string_view json_text);

std::string ReadTextFile(const std::filesystem::path &path);

enum class TraceFormat { kText, kJson };

struct RunConfig {
  std::filesystem::path kb;
  std::filesystem::path dialogue;
  std::optional<std::filesystem::path> scene;
  TraceFormat trace = TraceFormat::kText;
  EngineOptions engine;
  UnknownTokenPolicy unknown_tokens = UnknownTokenPolicy::kFail;
};

// Replays a dialogue in a fresh session. Throws Error on bad input; parse
// errors name the dialogue line.
std::vector<UtteranceResult> RunDialogue(std::shared_ptr<const KnowledgeBase> kb,
                                         const std::optional<Scene> &scene,
                                         const std::vector<DialogueLine> &lines,
                                         const EngineOptions &options,
                                         UnknownTokenPolicy unknown_tokens);

// Returns whether the expectation holds, with a short explanation. Throws
// kIndexOutOfRange if it names a missing utterance or argument.
bool CheckExpectation(const Expectation &expectation,
                      const std::vector<UtteranceResult> &results,
                      std::string *detail);

// Exit codes: 0 no FAIL verdict, 2 some FAIL verdict, 1 input error.
int RunResolve(const RunConfig &config, std::ostream &out, std::ostream &err);

// Exit codes: 0 every expectation holds, 2 some does not, 1 input error or
// an expectation out of range.
int RunCheck(const RunConfig &config, const std::filesystem::path &gold,
             std::ostream &out, std::ostream &err);

}  // namespace refdom

#endif  // REFDOM_HARNESS_H_
