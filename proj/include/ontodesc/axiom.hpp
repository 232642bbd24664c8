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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontodesc/class_expression.hpp"
#include "ontodesc/entity.hpp"

namespace ontodesc {

/// Axiom inventory. The comment gives the short code used in reports.
enum class AxiomType : std::uint8_t {
  SubPropertyOf,          // PS(sub, super)
  DisjointProperties,     // PJ, orderless
  EquivalentProperties,   // PE, orderless
  InverseProperties,      // PI(p, r)
  PropertyDomain,         // PD(p, class)
  PropertyRange,          // PR(p, class | datatype)
  FunctionalProperty,     // PF(p)
  ReflexiveProperty,      // PX(p)
  SymmetricProperty,      // PY(p)
  TransitiveProperty,     // PT(p)
  SubClassOf,             // CS(sub, super)
  EquivalentClasses,      // CE, orderless
  DisjointClasses,        // CJ, orderless
  ClassDefinition,        // CD(class, expression)
  ClassAssertion,         // AC(individual, class)
  PropertyAssertion,      // AV(individual, property, individual | literal)
  SameIndividual,         // AS, orderless
  DifferentIndividuals,   // AD, orderless
  SubPropertyChain,       // super <- p1 o p2; reasoner only
  IrreflexiveProperty,    // reasoner only
};

inline constexpr std::size_t kAxiomTypeCount = 20;

inline constexpr std::array<AxiomType, kAxiomTypeCount> kAllAxiomTypes = {
    AxiomType::SubPropertyOf,      AxiomType::DisjointProperties,
    AxiomType::EquivalentProperties, AxiomType::InverseProperties,
    AxiomType::PropertyDomain,     AxiomType::PropertyRange,
    AxiomType::FunctionalProperty, AxiomType::ReflexiveProperty,
    AxiomType::SymmetricProperty,  AxiomType::TransitiveProperty,
    AxiomType::SubClassOf,         AxiomType::EquivalentClasses,
    AxiomType::DisjointClasses,    AxiomType::ClassDefinition,
    AxiomType::ClassAssertion,     AxiomType::PropertyAssertion,
    AxiomType::SameIndividual,     AxiomType::DifferentIndividuals,
    AxiomType::SubPropertyChain,   AxiomType::IrreflexiveProperty,
};

enum class Box : std::uint8_t { RBox, TBox, ABox };

Box box_of(AxiomType type);
bool is_orderless(AxiomType type);
/// Short code such as "PS" or "AV"; "CH" and "PIR" for the reasoner-only types.
std::string_view code(AxiomType type);
/// Statement keyword of the text format.
std::string_view keyword(AxiomType type);

/// One axiom. Orderless axioms keep their two arguments sorted, so
/// `disjoint_classes(A, B) == disjoint_classes(B, A)`.
class Axiom {
 public:
  Axiom() = default;

  static Axiom sub_property(Entity sub, Entity super);
  static Axiom disjoint_properties(Entity p, Entity r);
  static Axiom equivalent_properties(Entity p, Entity r);
  static Axiom inverse_properties(Entity p, Entity r);
  static Axiom domain(Entity property, Entity cls);
  static Axiom range(Entity property, Entity cls_or_datatype);
  static Axiom functional(Entity property);
  static Axiom reflexive(Entity property);
  static Axiom symmetric(Entity property);
  static Axiom transitive(Entity property);
  static Axiom irreflexive(Entity property);
  static Axiom chain(Entity super, Entity first, Entity second);
  static Axiom sub_class(Entity sub, Entity super);
  static Axiom equivalent_classes(Entity a, Entity b);
  static Axiom disjoint_classes(Entity a, Entity b);
  static Axiom definition(Entity cls, ClassExpression expr);
  static Axiom class_assertion(Entity individual, Entity cls);
  static Axiom property_assertion(Entity subject, Entity property, Entity filler);
  static Axiom same_individual(Entity a, Entity b);
  static Axiom different_individuals(Entity a, Entity b);

  /// Smallest axiom of `type` whose first argument is `first`, as a lower
  /// bound for range scans over ordered axiom sets.
  static Axiom lower_bound_key(AxiomType type, Entity first);

  AxiomType type() const noexcept { return type_; }
  Box box() const { return box_of(type_); }

  /// Argument positions follow the comments on AxiomType; `first()` is the
  /// ground position (the subject for assertions, the super for chains).
  const Entity& first() const noexcept { return first_; }
  const Entity& second() const noexcept { return second_; }
  const Entity& third() const noexcept { return third_; }
  const ClassExpression* definition() const noexcept {
    return definition_ ? &*definition_ : nullptr;
  }

  /// Every entity the axiom mentions, including those inside a definition.
  std::vector<Entity> entities() const;

  /// Throws KindMismatch when argument kinds violate the typing rules
  /// (e.g. a transitive data property) or InvalidExpression for bad definitions.
  void validate() const;

  std::strong_ordering operator<=>(const Axiom&) const = default;
  bool operator==(const Axiom&) const = default;

 private:
  Axiom(AxiomType type, Entity first, Entity second = {}, Entity third = {});

  AxiomType type_ = AxiomType::SubClassOf;
  Entity first_;
  Entity second_;
  Entity third_;
  std::optional<ClassExpression> definition_;
};

/// One statement of the text format, e.g. `SubClassOf(ROOM INDOOR)`.
std::string render(const Axiom& axiom);

}  // namespace ontodesc
