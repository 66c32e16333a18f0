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

// refdom: replay a dialogue through the resolver, or check it against gold
// annotations.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "refdom/harness.h"

namespace {

void AddRunOptions(CLI::App *cmd, refdom::RunConfig &config,
                   std::string &trace, std::string &ambiguity,
                   std::string &agreement, std::string &unknown,
                   std::string &scene) {
  cmd->add_option("--kb", config.kb, "knowledge base (JSON)")->required();
  cmd->add_option("--dialogue", config.dialogue, "dialogue, one utterance per line")
      ->required();
  cmd->add_option("--scene", scene, "scene (JSON)");
  cmd->add_option("--trace", trace, "trace format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--ambiguity", ambiguity, "first compatible domain, or list all")
      ->check(CLI::IsMember({"first", "report"}));
  cmd->add_option("--agreement", agreement, "gender/number agreement for pronouns")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--proximity-threshold",
                  config.engine.grouping.proximity_threshold,
                  "single-link distance for perceptual proximity groups")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--unknown-tokens", unknown, "unknown words fail the line or are skipped")
      ->check(CLI::IsMember({"fail", "skip"}));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Reference resolution over reference domains"};
  app.require_subcommand(1);

  refdom::RunConfig config;
  std::string trace = "text", ambiguity = "first", agreement = "off";
  std::string unknown = "fail", scene, gold;

  CLI::App *resolve = app.add_subcommand("resolve", "print one trace record per referring expression");
  AddRunOptions(resolve, config, trace, ambiguity, agreement, unknown, scene);
  CLI::App *check = app.add_subcommand("check", "compare resolutions with gold annotations");
  AddRunOptions(check, config, trace, ambiguity, agreement, unknown, scene);
  check->add_option("--gold", gold, "gold annotations (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!scene.empty()) config.scene = scene;
  config.trace = trace == "json" ? refdom::TraceFormat::kJson
                                 : refdom::TraceFormat::kText;
  config.engine.ambiguity = ambiguity == "report" ? refdom::AmbiguityMode::kReport
                                                  : refdom::AmbiguityMode::kFirst;
  config.engine.agreement = agreement == "on";
  config.unknown_tokens = unknown == "skip" ? refdom::UnknownTokenPolicy::kSkip
                                            : refdom::UnknownTokenPolicy::kFail;

  if (*resolve) return refdom::RunResolve(config, std::cout, std::cerr);
  return refdom::RunCheck(config, gold, std::cout, std::cerr);
}
