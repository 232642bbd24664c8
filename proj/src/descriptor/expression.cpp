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

#include "ontodesc/expression.hpp"

namespace ontodesc {

std::string_view code(Expression tag) {
  switch (tag) {
    case Expression::SubProperty: return "PS";
    case Expression::DisjointProperty: return "PJ";
    case Expression::EquivalentProperty: return "PE";
    case Expression::InverseProperty: return "PI";
    case Expression::Domain: return "PD";
    case Expression::Range: return "PR";
    case Expression::Functional: return "PF";
    case Expression::Reflexive: return "PX";
    case Expression::Symmetric: return "PY";
    case Expression::Transitive: return "PT";
    case Expression::SubClass: return "CS";
    case Expression::SuperClass: return "CSup";
    case Expression::EquivalentClass: return "CE";
    case Expression::DisjointClass: return "CJ";
    case Expression::Definition: return "CD";
    case Expression::Instance: return "CA";
    case Expression::Type: return "AC";
    case Expression::PropertyValue: return "AV";
    case Expression::SameIndividual: return "AS";
    case Expression::DifferentIndividual: return "AD";
  }
  return "?";
}

std::optional<Expression> expression_from_code(std::string_view text) {
  for (Expression tag : kAllExpressions)
    if (code(tag) == text) return tag;
  return std::nullopt;
}

Partition partition_of(Expression tag) {
  if (tag <= Expression::Transitive) return Partition::Property;
  if (tag <= Expression::Instance) return Partition::Class;
  return Partition::Individual;
}

AxiomType axiom_type(Expression tag) {
  switch (tag) {
    case Expression::SubProperty: return AxiomType::SubPropertyOf;
    case Expression::DisjointProperty: return AxiomType::DisjointProperties;
    case Expression::EquivalentProperty: return AxiomType::EquivalentProperties;
    case Expression::InverseProperty: return AxiomType::InverseProperties;
    case Expression::Domain: return AxiomType::PropertyDomain;
    case Expression::Range: return AxiomType::PropertyRange;
    case Expression::Functional: return AxiomType::FunctionalProperty;
    case Expression::Reflexive: return AxiomType::ReflexiveProperty;
    case Expression::Symmetric: return AxiomType::SymmetricProperty;
    case Expression::Transitive: return AxiomType::TransitiveProperty;
    case Expression::SubClass:
    case Expression::SuperClass: return AxiomType::SubClassOf;
    case Expression::EquivalentClass: return AxiomType::EquivalentClasses;
    case Expression::DisjointClass: return AxiomType::DisjointClasses;
    case Expression::Definition: return AxiomType::ClassDefinition;
    case Expression::Instance:
    case Expression::Type: return AxiomType::ClassAssertion;
    case Expression::PropertyValue: return AxiomType::PropertyAssertion;
    case Expression::SameIndividual: return AxiomType::SameIndividual;
    case Expression::DifferentIndividual: return AxiomType::DifferentIndividuals;
  }
  return AxiomType::SubClassOf;
}

bool accepts_ground(Expression tag, const Entity& ground) {
  switch (partition_of(tag)) {
    case Partition::Property: return ground.is_property();
    case Partition::Class: return ground.is_class();
    case Partition::Individual: return ground.is_individual();
  }
  return false;
}

}  // namespace ontodesc
