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
#include "refdom/scene.h"

namespace refdom {
namespace {

using testing::LoadKb;

ErrorCode ParseError(const std::string &text, const KnowledgeBase &kb) {
  try {
    ParseScene(text, kb.types());
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kMalformedInput;
}

SceneEntity Entity(std::string id, std::string type, Properties props, double x,
                   double y) {
  return {std::move(id), std::move(type), std::move(props), {x, y}};
}

std::vector<DomainId> Group(ContextModel &ctx, const Scene &scene,
                            const KnowledgeBase &kb) {
  SeedScene(scene, ctx);
  return PerceptualGroup(ctx, scene, kb, GroupingParams{});
}

TEST_CASE("scene parsing") {
  auto kb = LoadKb("kb_en.json");
  Scene s = ParseScene(R"({"entities":[
      {"id":"b1","type":"BLOCK","properties":{"color":"red"},"position":[1,2]}]})",
                       kb->types());
  REQUIRE(s.entities.size() == 1);
  CHECK(s.entities[0].properties.at("color") == "red");
  CHECK(s.entities[0].position.y == 2);
  CHECK(ParseError("[]", *kb) == ErrorCode::kMalformedInput);
  CHECK(ParseError(R"({"entities":[{"id":"x","type":"UNICORN","position":[0,0]}]})",
                   *kb) == ErrorCode::kUnknownType);
  CHECK(ParseError(R"({"entities":[
      {"id":"x","type":"BLOCK","position":[0,0]},
      {"id":"x","type":"BLOCK","position":[1,0]}]})",
                   *kb) == ErrorCode::kDuplicateEntity);
  CHECK(ParseError(R"({"entities":[{"id":"x","type":"BLOCK","position":[0]}]})",
                   *kb) == ErrorCode::kMalformedInput);
  CHECK(ParseScene(R"({"entities":[]})", kb->types()).entities.empty());
}

TEST_CASE("seeding puts the last entity first") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  Scene scene = testing::LoadSceneFile("scenes/blocks.json", *kb);
  SeedScene(scene, ctx);
  REQUIRE(ctx.activation().size() == 4);
  CHECK(ctx.activation().front() == DomainId("p2"));
  CHECK(ctx.activation().back() == DomainId("b1"));
  CHECK(ctx.Get(DomainId("b1")).source == Source::kPerception);
  CHECK(ctx.Get(DomainId("b1")).cardinality.IsOne());
}

TEST_CASE("proximity clusters") {
  std::vector<Point> pts{{0, 0}, {10, 0}, {1, 0}, {11, 0}, {2, 0}};
  auto c = ProximityClusters(pts, 1.0);
  CHECK(c == std::vector<std::vector<size_t>>{{0, 2, 4}, {1, 3}});
  CHECK(ProximityClusters(pts, 0.5).size() == 5);
  CHECK(ProximityClusters({}, 1.0).empty());
}

TEST_CASE("similarity classes") {
  std::vector<Percept> ps{{"BLOCK", {{"color", "red"}}},
                          {"PYRAMID", {{"color", "red"}}},
                          {"BLOCK", {{"color", "blue"}}}};
  std::vector<std::string> keys{"color"};
  auto classes = SimilarityClasses(ps, keys);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].key == "type");
  CHECK(classes[0].members == std::vector<size_t>{0, 2});
  CHECK(classes[1].value == "red");
  CHECK(classes[1].members == std::vector<size_t>{0, 1});
}

TEST_CASE("three red blocks close together and a blue one far away") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  Scene scene{{Entity("r1", "BLOCK", {{"color", "red"}}, 0, 0),
               Entity("r2", "BLOCK", {{"color", "red"}}, 1, 0),
               Entity("r3", "BLOCK", {{"color", "red"}}, 2, 0),
               Entity("u1", "BLOCK", {{"color", "blue"}}, 20, 0)}};
  std::vector<DomainId> made = Group(ctx, scene, *kb);
  REQUIRE(made.size() == 1);
  const ReferenceDomain &g = ctx.Get(made[0]);
  CHECK(g.type == "BLOCK");
  CHECK(g.cardinality == Cardinality::Exactly(3));
  CHECK(g.source == Source::kPerception);
  REQUIRE(g.partitions.size() == 1);
  CHECK(g.partitions[0].criterion == Criterion::ByPosition("horizontal"));
  CHECK(g.partitions[0].cells == std::vector<Cell>{{"left", DomainId("r1")},
                                                   {"middle", DomainId("r2")},
                                                   {"right", DomainId("r3")}});
  CHECK_FALSE(g.HasProfiledCell());
}

TEST_CASE("a circle next to a triangle forms a group by type") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  Scene scene = testing::LoadSceneFile("scenes/figures.json", *kb);
  std::vector<DomainId> made = Group(ctx, scene, *kb);
  REQUIRE_FALSE(made.empty());
  const ReferenceDomain &g = ctx.Get(made[0]);
  CHECK(g.type == "FIGURE");
  CHECK(g.partitions[0].criterion == Criterion::ByType());
  CHECK(g.partitions[0].cells == std::vector<Cell>{{"CIRCLE", DomainId("c1")},
                                                   {"TRIANGLE", DomainId("t1")}});
  // Grouping again adds nothing.
  CHECK(PerceptualGroup(ctx, scene, *kb, GroupingParams{}).empty());
  ctx.CheckInvariants();
}

TEST_CASE("different types far apart are not grouped") {
  auto kb = LoadKb("kb_en.json");
  ContextModel ctx(kb->hierarchy);
  Scene scene{{Entity("c", "CIRCLE", {}, 0, 0), Entity("s", "SQUARE", {}, 50, 0)}};
  CHECK(Group(ctx, scene, *kb).empty());
  GroupingParams bad;
  bad.proximity_threshold = 0;
  CHECK_THROWS_AS(PerceptualGroup(ctx, scene, *kb, bad), Error);
}

TEST_CASE("grouping oracles") {
  auto prox = testing::CheckProximityOracle(500, 31);
  auto sim = testing::CheckSimilarityOracle(500, 32);
  INFO(prox.Summary());
  INFO(sim.Summary());
  CHECK(prox.ok());
  CHECK(sim.ok());
}

}  // namespace
}  // namespace refdom
