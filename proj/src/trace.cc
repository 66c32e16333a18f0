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

#include "refdom/trace.h"

#include "json.hpp"

namespace refdom {
namespace {

using Json = nlohmann::ordered_json;

Json IdOrNull(const std::optional<DomainId> &id) {
  return id ? Json(id->str()) : Json(nullptr);
}

}  // namespace

std::string TraceJson(const Resolution &r) {
  Json j;
  j["utterance"] = r.utterance;
  j["argument"] = r.argument;
  j["surface"] = r.expr.surface;
  j["determiner"] = DeterminerClassName(r.expr.det);
  j["underspecified"] = r.usd.ToString();
  Json candidates = Json::array();
  for (const CandidateStep &step : r.candidates) {
    Json c;
    c["stage"] = step.stage;
    c["domain"] = step.domain.str();
    c["pass"] = step.pass;
    c["action"] = step.action;
    c["reason"] = step.reason;
    candidates.push_back(std::move(c));
  }
  j["candidates"] = std::move(candidates);
  j["stage"] = r.stage.empty() ? Json(nullptr) : Json(r.stage);
  j["selected"] = IdOrNull(r.selected);
  j["domain"] = IdOrNull(r.domain);
  j["referent"] = IdOrNull(r.referent);
  j["new_referent"] = r.new_referent;
  j["verdict"] = VerdictName(r.verdict);
  j["fail_reason"] = r.fail_reason.empty() ? Json(nullptr) : Json(r.fail_reason);
  j["restructure"] = r.restructure.empty() ? Json(nullptr) : Json(r.restructure);
  Json passing = Json::array();
  for (const DomainId &id : r.passing) passing.push_back(id.str());
  j["passing"] = std::move(passing);
  return j.dump();
}

std::string TraceText(const Resolution &r) {
  std::string s = "u" + std::to_string(r.utterance) + ".a" +
                  std::to_string(r.argument) + " \"" + r.expr.surface + "\" " +
                  r.usd.ToString() + "\n";
  for (const CandidateStep &step : r.candidates) {
    s += "  " + step.stage + " " + step.domain.str();
    if (step.action) {
      s += ": " + step.reason + "\n";
      continue;
    }
    s += step.pass ? " pass" : " fail";
    if (!step.reason.empty()) s += " " + step.reason;
    s += "\n";
  }
  s += "  => ";
  switch (r.verdict) {
    case Verdict::kFail:
      s += "FAIL (" + r.fail_reason + ")";
      break;
    case Verdict::kUnresolved: {
      s += "UNRESOLVED passing:";
      for (const DomainId &id : r.passing) s += " " + id.str();
      break;
    }
    default:
      s += r.referent->str() + " in " + r.domain->str() + " [" +
           VerdictName(r.verdict) + "] " + r.restructure;
      break;
  }
  return s + "\n";
}

}  // namespace refdom
