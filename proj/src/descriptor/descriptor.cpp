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

#include "ontodesc/descriptor.hpp"

#include "ontodesc/error.hpp"
#include "ontodesc/reasoner.hpp"

namespace ontodesc {

namespace {

Position ground_position(Expression tag) {
  return tag == Expression::SubClass || tag == Expression::Instance ? Position::Second
                                                                    : Position::First;
}

// Axioms of the tag about the ground in the given view.
std::vector<Axiom> about(const Ontology& o, Expression tag, const Entity& ground, View view) {
  const AxiomType type = axiom_type(tag);
  if (is_orderless(type)) return o.axioms_about(type, ground, view);
  return o.axioms_with(type, ground, ground_position(tag), view);
}

// CS(NOTHING, x) and CS(x, THING) only say that nothing else is below or
// above x; write neither asserts nor retracts them.
bool is_sentinel(Expression tag, const Axiom& axiom) {
  return (tag == Expression::SubClass && axiom.first().is_nothing()) ||
         (tag == Expression::SuperClass && axiom.second().is_thing());
}

}  // namespace

std::string render(const Intent& intent) {
  std::string out = intent.direction == Intent::Direction::Read ? "read " : "write ";
  out += intent.change == Intent::Change::Add ? "add " : "remove ";
  if (intent.axiom) {
    out += render(*intent.axiom);
  } else if (intent.element) {
    out += render(*intent.element);
  }
  if (!intent.succeeded) out += " (failed)";
  return out;
}

Descriptor::Descriptor(OntologyHandle handle, Expression tag, Entity ground)
    : handle_(std::move(handle)), tag_(tag) {
  set_ground(std::move(ground));
}

void Descriptor::set_ground(Entity ground) {
  if (!accepts_ground(tag_, ground))
    throw Error(ErrorCode::KindMismatch,
                std::string(code(tag_)) + " cannot be grounded on " + ground.name());
  ground_ = std::move(ground);
}

bool Descriptor::contains(const Element& element) const {
  return std::find(elements_.begin(), elements_.end(), element) != elements_.end();
}

bool Descriptor::add(Element element) {
  if (tag_ == Expression::Definition) {
    // A list element is checked on its own, with the connective set aside.
    const auto* r = std::get_if<Restriction>(&element);
    if (!r)
      throw Error(ErrorCode::IllegalEntityVariant, "CD does not accept " + render(element));
    Restriction alone = *r;
    alone.next = Connective::None;
    to_owl(tag_, ground_, Element(alone));
  } else {
    to_owl(tag_, ground_, element);
  }
  if (contains(element)) return false;
  elements_.push_back(std::move(element));
  return true;
}

bool Descriptor::remove(const Element& element) {
  auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) return false;
  elements_.erase(it);
  return true;
}

std::set<Axiom> Descriptor::query() const {
  return handle_.inspect([&](const Ontology& o) {
    const Closure& closure = o.closure();
    std::set<Axiom> out;
    if (tag_ != Expression::SubClass && tag_ != Expression::SuperClass) {
      for (Axiom& a : about(o, tag_, ground_, View::Entailed))
        if (is_about(tag_, ground_, a)) out.insert(std::move(a));
      return out;
    }
    const bool below = tag_ == Expression::SubClass;
    std::vector<Entity> near = below ? direct_subclasses(o, closure, ground_)
                                     : direct_superclasses(o, closure, ground_);
    std::vector<Entity> equivalents;
    for (const Axiom& a : o.axioms_about(AxiomType::EquivalentClasses, ground_, View::Entailed))
      equivalents.push_back(a.first() == ground_ ? a.second() : a.first());
    const Entity sentinel = below ? Entity::nothing() : Entity::thing();
    if (!equivalents.empty() && near.size() == 1 && near.front() == sentinel) near.clear();
    near.insert(near.end(), equivalents.begin(), equivalents.end());
    for (const Entity& e : near)
      out.insert(below ? Axiom::sub_class(e, ground_) : Axiom::sub_class(ground_, e));
    return out;
  });
}

std::vector<Element> Descriptor::decode(const std::set<Axiom>& axioms) const {
  if (tag_ == Expression::Definition) {
    if (axioms.size() > 1)
      throw Error(ErrorCode::MappingError,
                  ground_.name() + " has " + std::to_string(axioms.size()) + " definitions");
    if (axioms.empty()) return {};
    return definition_from_owl(ground_, *axioms.begin());
  }
  std::vector<Element> out;
  for (const Axiom& a : axioms) out.push_back(from_owl(tag_, ground_, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Axiom> Descriptor::axiom_of(const Element& element,
                                          const std::vector<Element>& list) const {
  try {
    if (tag_ == Expression::Definition) return to_owl(tag_, ground_, std::span(list));
    return to_owl(tag_, ground_, element);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Intent> Descriptor::read() {
  std::vector<Element> next = decode(query());
  std::vector<Intent> intents;
  auto intent = [&](Intent::Change change, const Element& e, const std::vector<Element>& list) {
    intents.push_back({Intent::Direction::Read, change, e, axiom_of(e, list),
                       Intent::Target::Descriptor, true});
  };
  for (const Element& e : elements_)
    if (std::find(next.begin(), next.end(), e) == next.end())
      intent(Intent::Change::Remove, e, elements_);
  for (const Element& e : next)
    if (!contains(e)) intent(Intent::Change::Add, e, next);
  elements_ = std::move(next);
  return intents;
}

std::set<Axiom> Descriptor::mapped() const {
  std::set<Axiom> out;
  if (tag_ == Expression::Definition) {
    if (!elements_.empty()) out.insert(to_owl(tag_, ground_, std::span(elements_)));
    return out;
  }
  for (const Element& e : elements_) out.insert(to_owl(tag_, ground_, e));
  return out;
}

std::vector<Intent> Descriptor::write() {
  std::set<Axiom> desired = mapped();
  std::erase_if(desired, [&](const Axiom& a) { return is_sentinel(tag_, a); });
  return handle_.modify([&](Ontology& o) {
    std::vector<Intent> intents;
    auto element_of = [&](const Axiom& a) -> std::optional<Element> {
      if (tag_ == Expression::Definition) return std::nullopt;
      return from_owl(tag_, ground_, a);
    };
    std::set<Axiom> current;
    for (Axiom& a : about(o, tag_, ground_, View::Asserted))
      if (is_about(tag_, ground_, a) && !is_sentinel(tag_, a)) current.insert(std::move(a));
    for (const Axiom& a : current) {
      if (desired.contains(a)) continue;
      const bool done = o.retract_axiom(a);
      intents.push_back({Intent::Direction::Write, Intent::Change::Remove, element_of(a), a,
                         Intent::Target::Ontology, done});
    }
    for (const Axiom& a : desired) {
      if (current.contains(a)) continue;
      o.declare_entities(a);
      const bool done = o.assert_axiom(a);
      intents.push_back({Intent::Direction::Write, Intent::Change::Add, element_of(a), a,
                         Intent::Target::Ontology, done});
    }
    return intents;
  });
}

std::vector<Entity> Descriptor::build_grounds() const {
  auto undefined = [&](const std::string& why) {
    throw Error(ErrorCode::UndefinedBuild, std::string(code(tag_)) + " build: " + why);
  };
  std::vector<Entity> out;
  switch (tag_) {
    case Expression::Functional:
    case Expression::Reflexive:
    case Expression::Symmetric:
    case Expression::Transitive: undefined("characteristic elements are void");
    default: break;
  }
  for (const Element& e : elements_) {
    if (const auto* r = std::get_if<Restriction>(&e)) {
      if (r->form != RestrictionForm::Class)
        undefined("restriction " + render(e) + " has no class to build");
      if (r->filler.is_class()) out.push_back(r->filler);
    } else if (const auto* link = std::get_if<Link>(&e)) {
      if (link->filler.is_individual()) out.push_back(link->filler);
    } else if (const auto* entity = std::get_if<Entity>(&e)) {
      out.push_back(*entity);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Descriptor::require_links() const {
  if (tag_ != Expression::PropertyValue)
    throw Error(ErrorCode::TagMismatch,
                std::string(code(tag_)) + " descriptor has no property links");
}

std::vector<Entity> Descriptor::link_properties() const {
  require_links();
  std::vector<Entity> out;
  for (const Element& e : elements_) out.push_back(std::get<Link>(e).property);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Entity> Descriptor::linked_individuals(const Entity& property) const {
  require_links();
  std::vector<Entity> out;
  for (const Element& e : elements_) {
    const auto& link = std::get<Link>(e);
    if (link.property == property && link.filler.is_individual()) out.push_back(link.filler);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ontodesc
