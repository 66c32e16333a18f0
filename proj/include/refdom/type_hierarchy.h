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

#ifndef REFDOM_TYPE_HIERARCHY_H_
#define REFDOM_TYPE_HIERARCHY_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refdom/domain.h"

namespace refdom {

// Implicit top of every hierarchy. It is the parent of each declared root,
// so any two types have a common super-type. It may not be declared.
inline constexpr std::string_view kTopType = "ENTITY";

struct PartSpec {
  std::string role;
  std::string type;
  Cardinality count;
};

struct TypeNode {
  std::string name;
  std::optional<std::string> parent;
  std::vector<PartSpec> parts;
};

// Single-inheritance forest of type symbols with part-whole knowledge.
class TypeHierarchy {
 public:
  TypeHierarchy() = default;

  // Validates and indexes the nodes. Throws Error on cycles, unknown parents,
  // duplicate names, dangling part types or a declared kTopType.
  static TypeHierarchy Build(std::vector<TypeNode> nodes);

  bool Knows(std::string_view type) const;

  // a == b or b is an ancestor of a. Throws kUnknownType.
  bool IsSubtype(std::string_view a, std::string_view b) const;

  std::optional<std::string> Parent(std::string_view type) const;

  // Most specific type that every member of `types` is a subtype of.
  std::string CommonSupertype(std::span<const std::string> types) const;

  // Parts declared on `type` or inherited from its ancestors; the nearest
  // declaration of a role wins.
  std::vector<PartSpec> PartsOf(std::string_view type) const;

  const std::vector<TypeNode> &nodes() const { return nodes_; }

 private:
  void RequireKnown(std::string_view type) const;

  std::vector<TypeNode> nodes_;
  std::map<std::string, size_t, std::less<>> index_;
};

}  // namespace refdom

#endif  // REFDOM_TYPE_HIERARCHY_H_
