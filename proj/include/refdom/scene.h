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

#ifndef REFDOM_SCENE_H_
#define REFDOM_SCENE_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refdom/context.h"
#include "refdom/domain.h"
#include "refdom/knowledge_base.h"

namespace refdom {

struct Point {
  double x = 0;
  double y = 0;
};

struct SceneEntity {
  std::string id;
  std::string type;
  Properties properties;
  Point position;
};

struct Scene {
  std::vector<SceneEntity> entities;
};

// Parameters of perceptual grouping. Scene units are abstract.
struct GroupingParams {
  double proximity_threshold = 2.0;
  // Property names tried after the type, in order.
  std::vector<std::string> similarity_keys{"color", "size", "state"};
};

// {"entities":[{"id","type","properties":{},"position":[x,y]}]}
// Throws kMalformedInput, kUnknownType, kDuplicateEntity.
Scene ParseScene(std::string_view json_text, const TypeHierarchy &types);

// Adds one Perception domain per entity, tagged with the entity id. Entities
// are inserted in file order, so the first entity ends up least activated.
void SeedScene(const Scene &scene, ContextModel &context);

// ParseScene + SeedScene on a file.
Scene LoadScene(const std::filesystem::path &path, const KnowledgeBase &kb,
                ContextModel &context);

DomainId EntityDomainId(const SceneEntity &entity);

// Connected components of the "distance <= threshold" graph (single link).
// Components are listed by their smallest index; members ascend.
std::vector<std::vector<size_t>> ProximityClusters(std::span<const Point> points,
                                                   double threshold);

struct SimilarityClass {
  std::string key;  // "type" or a property name
  std::string value;
  std::vector<size_t> members;
};

struct Percept {
  std::string type;
  Properties properties;
};

// Maximal classes of >= 2 percepts sharing a value of "type" or of one of
// `keys`, in key order, then order of first appearance of the value.
std::vector<SimilarityClass> SimilarityClasses(std::span<const Percept> percepts,
                                               std::span<const std::string> keys);

// Runs similarity and proximity grouping over the scene's entities (read
// from the context, so state tags are seen) and adds a Perception group
// domain for each group that has a distinguishing partition and does not
// exist yet. Returns the ids created, in creation order.
std::vector<DomainId> PerceptualGroup(ContextModel &context,
                                      const Scene &scene,
                                      const KnowledgeBase &kb,
                                      const GroupingParams &params);

}  // namespace refdom

#endif  // REFDOM_SCENE_H_
