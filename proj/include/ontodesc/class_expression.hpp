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
#include <vector>

#include "ontodesc/entity.hpp"

namespace ontodesc {

/// A class expression appearing on the right-hand side of a definition.
///
/// Only flat shapes are representable: an atom (a named class or a
/// Some/Only/Min/Max restriction on a named filler), an intersection of atoms,
/// or a union whose members are atoms or intersections of atoms. Intersection
/// binds tighter than union, so every valid expression corresponds to exactly
/// one ordered restriction list. Operand order is preserved.
class ClassExpression {
 public:
  enum class Op : std::uint8_t { Named, And, Or, Some, Only, Min, Max };

  ClassExpression() = default;

  static ClassExpression named(Entity cls);
  static ClassExpression all_of(std::vector<ClassExpression> operands);
  static ClassExpression any_of(std::vector<ClassExpression> operands);
  static ClassExpression some(Entity property, Entity filler);
  static ClassExpression only(Entity property, Entity filler);
  static ClassExpression at_least(std::uint32_t cardinality, Entity property, Entity filler);
  static ClassExpression at_most(std::uint32_t cardinality, Entity property, Entity filler);

  Op op() const noexcept { return op_; }
  bool is_atom() const noexcept { return op_ != Op::And && op_ != Op::Or; }

  /// Named class for Named, filler class for the restrictions.
  const Entity& filler() const noexcept { return filler_; }
  const Entity& property() const noexcept { return property_; }
  std::uint32_t cardinality() const noexcept { return cardinality_; }
  const std::vector<ClassExpression>& operands() const noexcept { return operands_; }

  /// Throws InvalidExpression if the shape rules above or the entity kinds
  /// (class fillers, object properties, Min cardinality >= 1) are violated.
  void validate() const;

  /// Appends every entity mentioned by the expression.
  void collect_entities(std::vector<Entity>& out) const;

  std::strong_ordering operator<=>(const ClassExpression& other) const;
  bool operator==(const ClassExpression& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  Op op_ = Op::Named;
  std::uint32_t cardinality_ = 0;
  Entity property_;
  Entity filler_;
  std::vector<ClassExpression> operands_;
};

/// Functional-syntax rendering, e.g. `And(LOCATION Some(hasDoor DOOR))`.
std::string render(const ClassExpression& expr);

}  // namespace ontodesc
