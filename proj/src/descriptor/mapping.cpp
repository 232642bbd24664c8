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

#include "ontodesc/mapping.hpp"

#include "ontodesc/error.hpp"

namespace ontodesc {

namespace {

using Op = ClassExpression::Op;

[[noreturn]] void illegal(Expression tag, const Element& element) {
  throw Error(ErrorCode::IllegalEntityVariant,
              std::string(code(tag)) + " does not accept " + render(element));
}

template <class T>
const T& as(Expression tag, const Element& element) {
  const T* value = std::get_if<T>(&element);
  if (!value) illegal(tag, element);
  return *value;
}

Axiom checked(Axiom axiom) {
  axiom.validate();
  return axiom;
}

bool well_formed(const Restriction& r) {
  const bool counted = r.form == RestrictionForm::Min || r.form == RestrictionForm::Max;
  if (!counted && r.cardinality != 0) return false;
  if (r.form == RestrictionForm::Min && r.cardinality < 1) return false;
  if (r.form == RestrictionForm::Class) return r.property.empty() && !r.filler.empty();
  return !r.property.empty() && !r.filler.empty();
}

ClassExpression atom(const Restriction& r) {
  switch (r.form) {
    case RestrictionForm::Class: return ClassExpression::named(r.filler);
    case RestrictionForm::Some: return ClassExpression::some(r.property, r.filler);
    case RestrictionForm::All: return ClassExpression::only(r.property, r.filler);
    case RestrictionForm::Min: return ClassExpression::at_least(r.cardinality, r.property, r.filler);
    case RestrictionForm::Max: return ClassExpression::at_most(r.cardinality, r.property, r.filler);
  }
  return {};
}

Restriction restriction(const ClassExpression& e, Connective next) {
  switch (e.op()) {
    case Op::Named: return Restriction::of_class(e.filler(), next);
    case Op::Some: return Restriction::some(e.property(), e.filler(), next);
    case Op::Only: return Restriction::all(e.property(), e.filler(), next);
    case Op::Min: return Restriction::min(e.cardinality(), e.property(), e.filler(), next);
    case Op::Max: return Restriction::max(e.cardinality(), e.property(), e.filler(), next);
    default: break;
  }
  throw Error(ErrorCode::MappingError, "nested expression " + render(e));
}

// Appends the atoms of one conjunct, joined by OI and closed by `last`.
void append_conjunct(const ClassExpression& e, Connective last, std::vector<Element>& out) {
  if (e.op() != Op::And) {
    out.emplace_back(restriction(e, last));
    return;
  }
  const auto& atoms = e.operands();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    out.emplace_back(restriction(atoms[i], i + 1 == atoms.size() ? last : Connective::Intersection));
}

}  // namespace

bool is_about(Expression tag, const Entity& ground, const Axiom& axiom) {
  if (axiom.type() != axiom_type(tag)) return false;
  switch (tag) {
    case Expression::SubClass:
    case Expression::Instance: return axiom.second() == ground;
    default: break;
  }
  if (is_orderless(axiom.type())) return axiom.first() == ground || axiom.second() == ground;
  return axiom.first() == ground;
}

Axiom to_owl(Expression tag, const Entity& ground, const Element& element) {
  if (tag == Expression::Definition) return to_owl(tag, ground, std::span(&element, 1));
  if (!accepts_ground(tag, ground))
    throw Error(ErrorCode::KindMismatch,
                std::string(code(tag)) + " cannot be grounded on " + ground.name());
  switch (tag) {
    case Expression::SubProperty:
      return checked(Axiom::sub_property(ground, as<Entity>(tag, element)));
    case Expression::DisjointProperty:
      return checked(Axiom::disjoint_properties(ground, as<Entity>(tag, element)));
    case Expression::EquivalentProperty:
      return checked(Axiom::equivalent_properties(ground, as<Entity>(tag, element)));
    case Expression::InverseProperty:
      return checked(Axiom::inverse_properties(ground, as<Entity>(tag, element)));
    case Expression::Domain:
    case Expression::Range: {
      const auto& r = as<Restriction>(tag, element);
      if (r.form != RestrictionForm::Class || r.next != Connective::None || !well_formed(r))
        throw Error(ErrorCode::UnsupportedRestriction,
                    std::string(code(tag)) + " only takes a plain class, got " + render(element));
      return checked(tag == Expression::Domain ? Axiom::domain(ground, r.filler)
                                               : Axiom::range(ground, r.filler));
    }
    case Expression::Functional:
      as<VoidElement>(tag, element);
      return checked(Axiom::functional(ground));
    case Expression::Reflexive:
      as<VoidElement>(tag, element);
      return checked(Axiom::reflexive(ground));
    case Expression::Symmetric:
      as<VoidElement>(tag, element);
      return checked(Axiom::symmetric(ground));
    case Expression::Transitive:
      as<VoidElement>(tag, element);
      return checked(Axiom::transitive(ground));
    case Expression::SubClass: return checked(Axiom::sub_class(as<Entity>(tag, element), ground));
    case Expression::SuperClass: return checked(Axiom::sub_class(ground, as<Entity>(tag, element)));
    case Expression::EquivalentClass:
      return checked(Axiom::equivalent_classes(ground, as<Entity>(tag, element)));
    case Expression::DisjointClass:
      return checked(Axiom::disjoint_classes(ground, as<Entity>(tag, element)));
    case Expression::Instance:
      return checked(Axiom::class_assertion(as<Entity>(tag, element), ground));
    case Expression::Type: return checked(Axiom::class_assertion(ground, as<Entity>(tag, element)));
    case Expression::PropertyValue: {
      const auto& link = as<Link>(tag, element);
      return checked(Axiom::property_assertion(ground, link.property, link.filler));
    }
    case Expression::SameIndividual:
      return checked(Axiom::same_individual(ground, as<Entity>(tag, element)));
    case Expression::DifferentIndividual:
      return checked(Axiom::different_individuals(ground, as<Entity>(tag, element)));
    case Expression::Definition: break;
  }
  illegal(tag, element);
}

Axiom to_owl(Expression tag, const Entity& ground, std::span<const Element> elements) {
  if (tag != Expression::Definition) {
    if (elements.size() != 1)
      throw Error(ErrorCode::IllegalEntityVariant,
                  std::string(code(tag)) + " maps one element per axiom");
    return to_owl(tag, ground, elements.front());
  }
  if (!ground.is_class())
    throw Error(ErrorCode::KindMismatch, "CD cannot be grounded on " + ground.name());
  if (elements.empty())
    throw Error(ErrorCode::IllegalEntityVariant, "CD needs at least one restriction");

  std::vector<ClassExpression> disjuncts;
  std::vector<ClassExpression> conjunct;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& r = as<Restriction>(tag, elements[i]);
    const bool last = i + 1 == elements.size();
    if (!well_formed(r) || (r.next == Connective::None) != last) illegal(tag, elements[i]);
    conjunct.push_back(atom(r));
    if (r.next == Connective::Intersection) continue;
    disjuncts.push_back(conjunct.size() == 1 ? std::move(conjunct.front())
                                             : ClassExpression::all_of(std::move(conjunct)));
    conjunct.clear();
  }
  ClassExpression expr = disjuncts.size() == 1 ? std::move(disjuncts.front())
                                               : ClassExpression::any_of(std::move(disjuncts));
  return checked(Axiom::definition(ground, std::move(expr)));
}

Element from_owl(Expression tag, const Entity& ground, const Axiom& axiom) {
  if (tag == Expression::Definition || axiom.type() != axiom_type(tag))
    throw Error(ErrorCode::TagMismatch,
                render(axiom) + " is not a single " + std::string(code(tag)) + " element");
  if (!is_about(tag, ground, axiom))
    throw Error(ErrorCode::GroundMismatch, render(axiom) + " is not about " + ground.name());
  auto other = [&] { return axiom.first() == ground ? axiom.second() : axiom.first(); };
  switch (tag) {
    case Expression::Domain:
    case Expression::Range: return Restriction::of_class(axiom.second());
    case Expression::Functional:
    case Expression::Reflexive:
    case Expression::Symmetric:
    case Expression::Transitive: return VoidElement{};
    case Expression::SubClass:
    case Expression::Instance: return axiom.first();
    case Expression::PropertyValue: return Link{axiom.second(), axiom.third()};
    default: return other();
  }
}

std::vector<Element> definition_from_owl(const Entity& ground, const Axiom& axiom) {
  if (axiom.type() != AxiomType::ClassDefinition)
    throw Error(ErrorCode::TagMismatch, render(axiom) + " is not a CD axiom");
  if (axiom.first() != ground)
    throw Error(ErrorCode::GroundMismatch, render(axiom) + " is not about " + ground.name());
  const ClassExpression& expr = *axiom.definition();
  std::vector<Element> out;
  if (expr.op() == Op::Or) {
    const auto& members = expr.operands();
    for (std::size_t i = 0; i < members.size(); ++i)
      append_conjunct(members[i], i + 1 == members.size() ? Connective::None : Connective::Union,
                      out);
  } else {
    append_conjunct(expr, Connective::None, out);
  }
  return out;
}

}  // namespace ontodesc
