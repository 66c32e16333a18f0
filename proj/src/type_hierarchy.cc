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

#include "refdom/type_hierarchy.h"

#include <set>

#include "refdom/error.h"

namespace refdom {

TypeHierarchy TypeHierarchy::Build(std::vector<TypeNode> nodes) {
  TypeHierarchy h;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string &name = nodes[i].name;
    if (name.empty()) {
      throw Error(ErrorCode::kMalformedInput, "type with empty name");
    }
    if (name == kTopType) {
      throw Error(ErrorCode::kReservedType,
                  std::string(kTopType) + " is the implicit top type");
    }
    if (!h.index_.emplace(name, i).second) {
      throw Error(ErrorCode::kDuplicateType, name);
    }
  }
  for (const TypeNode &node : nodes) {
    if (!node.parent) continue;
    if (*node.parent == node.name) {
      throw Error(ErrorCode::kCycle, node.name + " is its own parent");
    }
    if (*node.parent != kTopType && !h.index_.count(*node.parent)) {
      throw Error(ErrorCode::kUnknownParent,
                  node.name + " -> " + *node.parent);
    }
  }
  // Walk up from every node; a walk longer than the node count is a cycle.
  for (const TypeNode &node : nodes) {
    std::set<std::string> seen{node.name};
    std::optional<std::string> cur = node.parent;
    while (cur && *cur != kTopType) {
      if (!seen.insert(*cur).second) {
        throw Error(ErrorCode::kCycle, "cycle through " + node.name);
      }
      cur = nodes[h.index_.find(*cur)->second].parent;
    }
  }
  for (const TypeNode &node : nodes) {
    for (const PartSpec &part : node.parts) {
      if (part.type != kTopType && !h.index_.count(part.type)) {
        throw Error(ErrorCode::kDanglingPartType,
                    node.name + "." + part.role + ": " + part.type);
      }
    }
  }
  h.nodes_ = std::move(nodes);
  return h;
}

bool TypeHierarchy::Knows(std::string_view type) const {
  return type == kTopType || index_.find(type) != index_.end();
}

void TypeHierarchy::RequireKnown(std::string_view type) const {
  if (!Knows(type)) throw Error(ErrorCode::kUnknownType, std::string(type));
}

std::optional<std::string> TypeHierarchy::Parent(std::string_view type) const {
  RequireKnown(type);
  if (type == kTopType) return std::nullopt;
  const TypeNode &node = nodes_[index_.find(type)->second];
  return node.parent ? *node.parent : std::string(kTopType);
}

bool TypeHierarchy::IsSubtype(std::string_view a, std::string_view b) const {
  RequireKnown(a);
  RequireKnown(b);
  std::optional<std::string> cur{std::string(a)};
  while (cur) {
    if (*cur == b) return true;
    cur = Parent(*cur);
  }
  return false;
}

std::string TypeHierarchy::CommonSupertype(
    std::span<const std::string> types) const {
  if (types.empty()) return std::string(kTopType);
  for (const std::string &t : types) RequireKnown(t);
  std::optional<std::string> cur = types.front();
  while (cur) {
    bool all = true;
    for (const std::string &t : types) {
      if (!IsSubtype(t, *cur)) {
        all = false;
        break;
      }
    }
    if (all) return *cur;
    cur = Parent(*cur);
  }
  return std::string(kTopType);
}

std::vector<PartSpec> TypeHierarchy::PartsOf(std::string_view type) const {
  RequireKnown(type);
  std::vector<PartSpec> parts;
  std::set<std::string> roles;
  std::optional<std::string> cur{std::string(type)};
  while (cur && *cur != kTopType) {
    for (const PartSpec &part : nodes_[index_.find(*cur)->second].parts) {
      if (roles.insert(part.role).second) parts.push_back(part);
    }
    cur = Parent(*cur);
  }
  return parts;
}

}  // namespace refdom
