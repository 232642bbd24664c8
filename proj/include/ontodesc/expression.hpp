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
#include <cstdint>
#include <optional>
#include <string_view>

#include "ontodesc/axiom.hpp"

namespace ontodesc {

/// Descriptor expression tags. The comment is the short code.
enum class Expression : std::uint8_t {
  SubProperty,          // PS: super-properties of the ground
  DisjointProperty,     // PJ
  EquivalentProperty,   // PE
  InverseProperty,      // PI
  Domain,               // PD
  Range,                // PR
  Functional,           // PF
  Reflexive,            // PX
  Symmetric,            // PY
  Transitive,           // PT
  SubClass,             // CS: classes below the ground
  SuperClass,           // CSup: classes above the ground, same CS axioms
  EquivalentClass,      // CE
  DisjointClass,        // CJ
  Definition,           // CD
  Instance,             // CA: individuals of the ground class
  Type,                 // AC
  PropertyValue,        // AV
  SameIndividual,       // AS
  DifferentIndividual,  // AD
};

enum class Partition : std::uint8_t { Property, Class, Individual };

inline constexpr std::array<Expression, 20> kAllExpressions = {
    Expression::SubProperty,     Expression::DisjointProperty, Expression::EquivalentProperty,
    Expression::InverseProperty, Expression::Domain,           Expression::Range,
    Expression::Functional,      Expression::Reflexive,        Expression::Symmetric,
    Expression::Transitive,      Expression::SubClass,         Expression::SuperClass,
    Expression::EquivalentClass, Expression::DisjointClass,    Expression::Definition,
    Expression::Instance,        Expression::Type,             Expression::PropertyValue,
    Expression::SameIndividual,  Expression::DifferentIndividual,
};

std::string_view code(Expression tag);
std::optional<Expression> expression_from_code(std::string_view code);
Partition partition_of(Expression tag);
AxiomType axiom_type(Expression tag);

/// Whether `ground` has the entity kind required by the tag's partition.
bool accepts_ground(Expression tag, const Entity& ground);

}  // namespace ontodesc
