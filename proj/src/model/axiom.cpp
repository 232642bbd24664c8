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

#include "ontodesc/axiom.hpp"

#include <utility>

#include "ontodesc/error.hpp"

namespace ontodesc {

Box box_of(AxiomType type) {
  switch (type) {
    case AxiomType::SubClassOf:
    case AxiomType::EquivalentClasses:
    case AxiomType::DisjointClasses:
    case AxiomType::ClassDefinition:
      return Box::TBox;
    case AxiomType::ClassAssertion:
    case AxiomType::PropertyAssertion:
    case AxiomType::SameIndividual:
    case AxiomType::DifferentIndividuals:
      return Box::ABox;
    default:
      return Box::RBox;
  }
}

bool is_orderless(AxiomType type) {
  switch (type) {
    case AxiomType::DisjointProperties:
    case AxiomType::EquivalentProperties:
    case AxiomType::EquivalentClasses:
    case AxiomType::DisjointClasses:
    case AxiomType::SameIndividual:
    case AxiomType::DifferentIndividuals:
      return true;
    default:
      return false;
  }
}

std::string_view code(AxiomType type) {
  switch (type) {
    case AxiomType::SubPropertyOf: return "PS";
    case AxiomType::DisjointProperties: return "PJ";
    case AxiomType::EquivalentProperties: return "PE";
    case AxiomType::InverseProperties: return "PI";
    case AxiomType::PropertyDomain: return "PD";
    case AxiomType::PropertyRange: return "PR";
    case AxiomType::FunctionalProperty: return "PF";
    case AxiomType::ReflexiveProperty: return "PX";
    case AxiomType::SymmetricProperty: return "PY";
    case AxiomType::TransitiveProperty: return "PT";
    case AxiomType::SubClassOf: return "CS";
    case AxiomType::EquivalentClasses: return "CE";
    case AxiomType::DisjointClasses: return "CJ";
    case AxiomType::ClassDefinition: return "CD";
    case AxiomType::ClassAssertion: return "AC";
    case AxiomType::PropertyAssertion: return "AV";
    case AxiomType::SameIndividual: return "AS";
    case AxiomType::DifferentIndividuals: return "AD";
    case AxiomType::SubPropertyChain: return "CH";
    case AxiomType::IrreflexiveProperty: return "PIR";
  }
  return "?";
}

std::string_view keyword(AxiomType type) {
  switch (type) {
    case AxiomType::SubPropertyOf: return "SubPropertyOf";
    case AxiomType::DisjointProperties: return "DisjointProperties";
    case AxiomType::EquivalentProperties: return "EquivalentProperties";
    case AxiomType::InverseProperties: return "InverseProperties";
    case AxiomType::PropertyDomain: return "PropertyDomain";
    case AxiomType::PropertyRange: return "PropertyRange";
    case AxiomType::FunctionalProperty: return "FunctionalProperty";
    case AxiomType::ReflexiveProperty: return "ReflexiveProperty";
    case AxiomType::SymmetricProperty: return "SymmetricProperty";
    case AxiomType::TransitiveProperty: return "TransitiveProperty";
    case AxiomType::SubClassOf: return "SubClassOf";
    case AxiomType::EquivalentClasses: return "EquivalentClasses";
    case AxiomType::DisjointClasses: return "DisjointClasses";
    case AxiomType::ClassDefinition: return "EquivalentClasses";
    case AxiomType::ClassAssertion: return "ClassAssertion";
    case AxiomType::PropertyAssertion: return "PropertyAssertion";
    case AxiomType::SameIndividual: return "SameIndividual";
    case AxiomType::DifferentIndividuals: return "DifferentIndividuals";
    case AxiomType::SubPropertyChain: return "SubPropertyChain";
    case AxiomType::IrreflexiveProperty: return "IrreflexiveProperty";
  }
  return "?";
}

Axiom::Axiom(AxiomType type, Entity first, Entity second, Entity third)
    : type_(type), first_(std::move(first)), second_(std::move(second)), third_(std::move(third)) {
  if (is_orderless(type_) && second_ < first_) std::swap(first_, second_);
}

Axiom Axiom::sub_property(Entity sub, Entity super) {
  return {AxiomType::SubPropertyOf, std::move(sub), std::move(super)};
}
Axiom Axiom::disjoint_properties(Entity p, Entity r) {
  return {AxiomType::DisjointProperties, std::move(p), std::move(r)};
}
Axiom Axiom::equivalent_properties(Entity p, Entity r) {
  return {AxiomType::EquivalentProperties, std::move(p), std::move(r)};
}
Axiom Axiom::inverse_properties(Entity p, Entity r) {
  return {AxiomType::InverseProperties, std::move(p), std::move(r)};
}
Axiom Axiom::domain(Entity property, Entity cls) {
  return {AxiomType::PropertyDomain, std::move(property), std::move(cls)};
}
Axiom Axiom::range(Entity property, Entity cls_or_datatype) {
  return {AxiomType::PropertyRange, std::move(property), std::move(cls_or_datatype)};
}
Axiom Axiom::functional(Entity property) {
  return {AxiomType::FunctionalProperty, std::move(property)};
}
Axiom Axiom::reflexive(Entity property) {
  return {AxiomType::ReflexiveProperty, std::move(property)};
}
Axiom Axiom::symmetric(Entity property) {
  return {AxiomType::SymmetricProperty, std::move(property)};
}
Axiom Axiom::transitive(Entity property) {
  return {AxiomType::TransitiveProperty, std::move(property)};
}
Axiom Axiom::irreflexive(Entity property) {
  return {AxiomType::IrreflexiveProperty, std::move(property)};
}
Axiom Axiom::chain(Entity super, Entity first, Entity second) {
  return {AxiomType::SubPropertyChain, std::move(super), std::move(first), std::move(second)};
}
Axiom Axiom::sub_class(Entity sub, Entity super) {
  return {AxiomType::SubClassOf, std::move(sub), std::move(super)};
}
Axiom Axiom::equivalent_classes(Entity a, Entity b) {
  return {AxiomType::EquivalentClasses, std::move(a), std::move(b)};
}
Axiom Axiom::disjoint_classes(Entity a, Entity b) {
  return {AxiomType::DisjointClasses, std::move(a), std::move(b)};
}
Axiom Axiom::definition(Entity cls, ClassExpression expr) {
  Axiom a(AxiomType::ClassDefinition, std::move(cls));
  a.definition_ = std::move(expr);
  return a;
}
Axiom Axiom::class_assertion(Entity individual, Entity cls) {
  return {AxiomType::ClassAssertion, std::move(individual), std::move(cls)};
}
Axiom Axiom::property_assertion(Entity subject, Entity property, Entity filler) {
  return {AxiomType::PropertyAssertion, std::move(subject), std::move(property),
          std::move(filler)};
}
Axiom Axiom::same_individual(Entity a, Entity b) {
  return {AxiomType::SameIndividual, std::move(a), std::move(b)};
}
Axiom Axiom::different_individuals(Entity a, Entity b) {
  return {AxiomType::DifferentIndividuals, std::move(a), std::move(b)};
}

Axiom Axiom::lower_bound_key(AxiomType type, Entity first) {
  Axiom a;
  a.type_ = type;
  a.first_ = std::move(first);
  return a;
}

std::vector<Entity> Axiom::entities() const {
  std::vector<Entity> out;
  for (const Entity* e : {&first_, &second_, &third_}) {
    if (!e->empty()) out.push_back(*e);
  }
  if (definition_) definition_->collect_entities(out);
  return out;
}

void Axiom::validate() const {
  auto fail = [&](const char* why) {
    throw Error(ErrorCode::KindMismatch, std::string(code(type_)) + ": " + why);
  };
  auto same_property_kind = [&] {
    if (!first_.is_property() || first_.kind() != second_.kind())
      fail("arguments must be properties of the same kind");
  };
  switch (type_) {
    case AxiomType::SubPropertyOf:
    case AxiomType::DisjointProperties:
    case AxiomType::EquivalentProperties:
      same_property_kind();
      break;
    case AxiomType::InverseProperties:
      if (!first_.is_object_property() || !second_.is_object_property())
        fail("inverse properties must be object properties");
      break;
    case AxiomType::PropertyDomain:
      if (!first_.is_property() || !second_.is_class()) fail("domain needs a property and a class");
      break;
    case AxiomType::PropertyRange:
      if (first_.is_object_property() && second_.is_class()) break;
      if (first_.is_data_property() && second_.kind() == EntityKind::Datatype) break;
      fail("object ranges are classes, data ranges are datatypes");
      break;
    case AxiomType::FunctionalProperty:
      if (!first_.is_property()) fail("not a property");
      break;
    case AxiomType::ReflexiveProperty:
    case AxiomType::SymmetricProperty:
    case AxiomType::TransitiveProperty:
    case AxiomType::IrreflexiveProperty:
      if (!first_.is_object_property()) fail("characteristic applies to object properties only");
      break;
    case AxiomType::SubPropertyChain:
      if (!first_.is_object_property() || !second_.is_object_property() ||
          !third_.is_object_property())
        fail("chains relate object properties");
      break;
    case AxiomType::SubClassOf:
    case AxiomType::EquivalentClasses:
    case AxiomType::DisjointClasses:
      if (!first_.is_class() || !second_.is_class()) fail("arguments must be named classes");
      break;
    case AxiomType::ClassDefinition:
      if (!first_.is_class() || !definition_) fail("definition needs a class and an expression");
      definition_->validate();
      break;
    case AxiomType::ClassAssertion:
      if (!first_.is_individual() || !second_.is_class()) fail("needs an individual and a class");
      break;
    case AxiomType::PropertyAssertion:
      if (!first_.is_individual()) fail("subject must be an individual");
      if (second_.is_object_property() && third_.is_individual()) break;
      if (second_.is_data_property() && third_.is_literal()) break;
      fail("object properties take individuals, data properties take literals");
      break;
    case AxiomType::SameIndividual:
    case AxiomType::DifferentIndividuals:
      if (!first_.is_individual() || !second_.is_individual()) fail("arguments must be individuals");
      break;
  }
}

std::string render(const Axiom& axiom) {
  std::string out;
  if (axiom.type() == AxiomType::ClassDefinition) {
    const ClassExpression& expr = *axiom.definition();
    // A bare named right-hand side would read back as EquivalentClasses.
    out = expr.op() == ClassExpression::Op::Named ? "DefineClass" : "EquivalentClasses";
    return out + "(" + axiom.first().name() + " " + render(expr) + ")";
  }
  out = std::string(keyword(axiom.type())) + "(";
  if (axiom.type() == AxiomType::ClassAssertion) {
    out += axiom.second().name() + " " + axiom.first().name();
  } else if (axiom.type() == AxiomType::PropertyAssertion) {
    out += axiom.second().name() + " " + axiom.first().name() + " " + axiom.third().name();
  } else {
    out += axiom.first().name();
    if (!axiom.second().empty()) out += " " + axiom.second().name();
    if (!axiom.third().empty()) out += " " + axiom.third().name();
  }
  return out + ")";
}

}  // namespace ontodesc
