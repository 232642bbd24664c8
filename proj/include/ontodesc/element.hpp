// Copyright 2026 The ontodesc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "ontodesc/entity.hpp"

namespace ontodesc {

/// Element of the unary characteristic tags (PF, PX, PY, PT).
struct VoidElement {
  auto operator<=>(const VoidElement&) const = default;
};

/// How a restriction combines with the next element of its list.
enum class Connective : std::uint8_t {
  Union,         // OU
  Intersection,  // OI
  None,          // OV, last element
};

enum class RestrictionForm : std::uint8_t {
  Class,  // RV: a named class
  Some,   // RS
  All,    // RA
  Min,    // Rm
  Max,    // RM
};

/// One item of a restriction list. Intersection binds tighter than union, so
/// [A OI, B OU, C OV] reads as Or(And(A B) C).
struct Restriction {
  Connective next = Connective::None;
  RestrictionForm form = RestrictionForm::Class;
  Entity property;  // empty for Class
  Entity filler;
  std::uint32_t cardinality = 0;  // Min and Max only

  static Restriction of_class(Entity cls, Connective next = Connective::None);
  static Restriction some(Entity property, Entity cls, Connective next = Connective::None);
  static Restriction all(Entity property, Entity cls, Connective next = Connective::None);
  static Restriction min(std::uint32_t n, Entity property, Entity cls,
                         Connective next = Connective::None);
  static Restriction max(std::uint32_t n, Entity property, Entity cls,
                         Connective next = Connective::None);

  std::strong_ordering operator<=>(const Restriction&) const = default;
  bool operator==(const Restriction&) const = default;
};

/// Property value of an individual: object or literal filler.
struct Link {
  Entity property;
  Entity filler;

  std::strong_ordering operator<=>(const Link&) const = default;
  bool operator==(const Link&) const = default;
};

using Element = std::variant<VoidElement, Entity, Restriction, Link>;

std::string render(const Element& element);

}  // namespace ontodesc
