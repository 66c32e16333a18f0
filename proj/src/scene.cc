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

#include "refdom/scene.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "refdom/error.h"

namespace refdom {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string &what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

// Union-find with path halving.
class Components {
 public:
  explicit Components(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void Join(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::string ValueOf(const Percept &p, const std::string &key) {
  if (key == "type") return p.type;
  auto it = p.properties.find(key);
  return it == p.properties.end() ? std::string() : it->second;
}

// First criterion whose values are defined and pairwise distinct over the
// members: the type, then the similarity keys, then any other property.
std::optional<Criterion> Distinguishing(const std::vector<Percept> &members,
                                        const std::vector<std::string> &keys) {
  std::vector<std::string> order{"type"};
  for (const std::string &k : keys) {
    if (std::find(order.begin(), order.end(), k) == order.end()) {
      order.push_back(k);
    }
  }
  std::set<std::string> rest;
  for (const Percept &p : members) {
    for (const auto &[name, value] : p.properties) rest.insert(name);
  }
  for (const std::string &name : rest) {
    if (std::find(order.begin(), order.end(), name) == order.end()) {
      order.push_back(name);
    }
  }
  for (const std::string &key : order) {
    std::set<std::string> values;
    bool ok = true;
    for (const Percept &p : members) {
      std::string v = ValueOf(p, key);
      if (v.empty() || !values.insert(v).second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return key == "type" ? Criterion::ByType() : Criterion::ByProperty(key);
    }
  }
  return std::nullopt;
}

std::vector<std::string> PositionLabels(size_t n) {
  if (n == 2) return {"left", "right"};
  if (n == 3) return {"left", "middle", "right"};
  std::vector<std::string> out;
  for (size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

bool GroupExists(const ContextModel &context, const Criterion &criterion,
                 const std::vector<DomainId> &members) {
  std::set<DomainId> wanted(members.begin(), members.end());
  for (const auto &[id, d] : context.store()) {
    if (d.source != Source::kPerception) continue;
    for (const Partition &p : d.partitions) {
      if (p.criterion != criterion) continue;
      std::set<DomainId> have;
      for (const Cell &c : p.cells) have.insert(c.member);
      if (have == wanted) return true;
    }
  }
  return false;
}

}  // namespace

DomainId EntityDomainId(const SceneEntity &entity) {
  return DomainId(entity.id);
}

Scene ParseScene(std::string_view json_text, const TypeHierarchy &types) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error &e) {
    Malformed(std::string("scene is not JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("entities") ||
      !root.at("entities").is_array()) {
    Malformed("scene needs an \"entities\" list");
  }
  Scene scene;
  std::set<std::string> ids;
  for (const Json &e : root.at("entities")) {
    if (!e.is_object() || !e.contains("id") || !e.at("id").is_string() ||
        !e.contains("type") || !e.at("type").is_string()) {
      Malformed("scene entity needs text \"id\" and \"type\"");
    }
    SceneEntity entity;
    entity.id = e.at("id").get<std::string>();
    entity.type = e.at("type").get<std::string>();
    if (entity.id.empty()) Malformed("scene entity with empty id");
    if (!ids.insert(entity.id).second) {
      throw Error(ErrorCode::kDuplicateEntity, entity.id);
    }
    if (!types.Knows(entity.type)) {
      throw Error(ErrorCode::kUnknownType, entity.id + ": " + entity.type);
    }
    if (e.contains("properties")) {
      const Json &props = e.at("properties");
      if (!props.is_object()) Malformed(entity.id + ".properties must be an object");
      for (const auto &[name, value] : props.items()) {
        if (!value.is_string()) Malformed(entity.id + "." + name + " must be text");
        entity.properties[name] = value.get<std::string>();
      }
    }
    if (e.contains("position")) {
      const Json &pos = e.at("position");
      if (!pos.is_array() || pos.size() != 2 || !pos[0].is_number() ||
          !pos[1].is_number()) {
        Malformed(entity.id + ".position must be [x, y]");
      }
      entity.position = {pos[0].get<double>(), pos[1].get<double>()};
    }
    scene.entities.push_back(std::move(entity));
  }
  return scene;
}

void SeedScene(const Scene &scene, ContextModel &context) {
  for (const SceneEntity &e : scene.entities) {
    context.NewDomain(e.type, Cardinality::Exactly(1), e.properties,
                      Source::kPerception, e.id);
  }
}

Scene LoadScene(const std::filesystem::path &path, const KnowledgeBase &kb,
                ContextModel &context) {
  std::ifstream in(path);
  if (!in) Malformed("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Scene scene = ParseScene(buf.str(), kb.types());
  SeedScene(scene, context);
  return scene;
}

std::vector<std::vector<size_t>> ProximityClusters(std::span<const Point> points,
                                                   double threshold) {
  Components comp(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      double d = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      if (d <= threshold) comp.Join(i, j);
    }
  }
  std::vector<std::vector<size_t>> clusters;
  std::vector<long> slot(points.size(), -1);
  for (size_t i = 0; i < points.size(); ++i) {
    size_t root = comp.Find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(i);
  }
  return clusters;
}

std::vector<SimilarityClass> SimilarityClasses(std::span<const Percept> percepts,
                                               std::span<const std::string> keys) {
  std::vector<std::string> order{"type"};
  for (const std::string &k : keys) {
    if (std::find(order.begin(), order.end(), k) == order.end()) {
      order.push_back(k);
    }
  }
  std::vector<SimilarityClass> out;
  for (const std::string &key : order) {
    std::vector<SimilarityClass> classes;
    for (size_t i = 0; i < percepts.size(); ++i) {
      std::string v = ValueOf(percepts[i], key);
      if (v.empty()) continue;
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const SimilarityClass &c) { return c.value == v; });
      if (it == classes.end()) {
        classes.push_back({key, v, {i}});
      } else {
        it->members.push_back(i);
      }
    }
    for (SimilarityClass &c : classes) {
      if (c.members.size() >= 2) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<DomainId> PerceptualGroup(ContextModel &context,
                                      const Scene &scene,
                                      const KnowledgeBase &kb,
                                      const GroupingParams &params) {
  if (params.proximity_threshold <= 0) {
    Malformed("proximity threshold must be positive");
  }
  std::vector<DomainId> ids;
  std::vector<Percept> percepts;
  std::vector<Point> points;
  for (const SceneEntity &e : scene.entities) {
    DomainId id = EntityDomainId(e);
    const ReferenceDomain &d = context.Get(id);
    ids.push_back(id);
    percepts.push_back({d.type, d.properties});
    points.push_back(e.position);
  }

  std::vector<DomainId> created;
  auto make_group = [&](const std::vector<size_t> &members,
                        const Criterion &criterion,
                        const std::vector<std::string> &values,
                        const Properties &shared) {
    std::vector<DomainId> member_ids;
    std::vector<std::string> types;
    for (size_t m : members) {
      member_ids.push_back(ids[m]);
      types.push_back(percepts[m].type);
    }
    if (GroupExists(context, criterion, member_ids)) return;
    DomainId group = context.NewDomain(
        kb.types().CommonSupertype(types),
        Cardinality::Exactly(static_cast<int64_t>(members.size())), shared,
        Source::kPerception, context.MintTag("G", true));
    std::vector<Cell> cells;
    for (size_t i = 0; i < members.size(); ++i) {
      cells.push_back({values[i], member_ids[i]});
    }
    context.AddPartition(group, criterion, std::move(cells));
    created.push_back(group);
  };

  for (const SimilarityClass &c :
       SimilarityClasses(percepts, params.similarity_keys)) {
    std::vector<Percept> members;
    for (size_t m : c.members) members.push_back(percepts[m]);
    std::optional<Criterion> criterion =
        Distinguishing(members, params.similarity_keys);
    if (!criterion) continue;
    std::vector<std::string> values;
    for (const Percept &p : members) {
      values.push_back(criterion->kind == Criterion::Kind::kType
                           ? p.type
                           : p.properties.at(criterion->name));
    }
    Properties shared;
    if (c.key != "type") shared[c.key] = c.value;
    make_group(c.members, *criterion, values, shared);
  }

  for (std::vector<size_t> cluster :
       ProximityClusters(points, params.proximity_threshold)) {
    if (cluster.size() < 2) continue;
    std::stable_sort(cluster.begin(), cluster.end(), [&](size_t a, size_t b) {
      if (points[a].x != points[b].x) return points[a].x < points[b].x;
      return points[a].y < points[b].y;
    });
    make_group(cluster, Criterion::ByPosition("horizontal"),
               PositionLabels(cluster.size()), {});
  }
  return created;
}

}  // namespace refdom
