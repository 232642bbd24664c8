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

#include "ontodesc/ontology.hpp"

#include <algorithm>

#include "ontodesc/error.hpp"

namespace ontodesc {

namespace {

const std::set<Axiom> kNoAxioms;

bool is_builtin(const Entity& e) {
  return e.is_literal() || e.kind() == EntityKind::Datatype;
}

// Calls fn on each axiom of `type` with first argument `first` (or on every
// axiom of `type` when `first` is empty).
template <class Fn>
void scan(const std::set<Axiom>& axioms, AxiomType type, const Entity* first, Fn&& fn) {
  auto it = axioms.lower_bound(Axiom::lower_bound_key(type, first ? *first : Entity{}));
  for (; it != axioms.end() && it->type() == type; ++it) {
    if (first && it->first() != *first) break;
    fn(*it);
  }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::KindClash: return "KindClash";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidExpression: return "InvalidExpression";
    case ErrorCode::StaleClosure: return "StaleClosure";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::IllegalEntityVariant: return "IllegalEntityVariant";
    case ErrorCode::UnsupportedRestriction: return "UnsupportedRestriction";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::MappingError: return "MappingError";
    case ErrorCode::UndefinedBuild: return "UndefinedBuild";
    case ErrorCode::MissingTag: return "MissingTag";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "?";
}

Ontology::Ontology() {
  vocabulary_.emplace(std::string(kThingIri), Entity::thing());
  vocabulary_.emplace(std::string(kNothingIri), Entity::nothing());
}

std::optional<Entity> Ontology::lookup(std::string_view iri) const {
  if (auto it = vocabulary_.find(iri); it != vocabulary_.end()) return it->second;
  return Entity::datatype(iri);
}

Entity Ontology::declare(EntityKind kind, std::string iri) {
  if (auto it = vocabulary_.find(iri); it != vocabulary_.end()) {
    if (it->second.kind() != kind)
      throw Error(ErrorCode::KindClash, iri + " is already declared as " +
                                            std::string(to_string(it->second.kind())));
    return it->second;
  }
  if (kind == EntityKind::Literal || kind == EntityKind::Datatype)
    throw Error(ErrorCode::InvalidIri, "literals and datatypes are not declared: " + iri);
  if (!is_valid_iri(iri)) throw Error(ErrorCode::InvalidIri, "invalid IRI '" + iri + "'");
  Entity entity(kind, iri);
  vocabulary_.emplace(std::move(iri), entity);
  ++revision_;
  return entity;
}

void Ontology::declare_entities(const Axiom& axiom) {
  for (const Entity& e : axiom.entities()) {
    if (!is_builtin(e)) declare(e.kind(), e.name());
  }
}

void Ontology::check_vocabulary(const Axiom& axiom) const {
  axiom.validate();
  for (const Entity& e : axiom.entities()) {
    if (is_builtin(e)) continue;
    auto it = vocabulary_.find(e.name());
    if (it == vocabulary_.end())
      throw Error(ErrorCode::UnknownEntity, "undeclared entity " + e.name());
    if (it->second.kind() != e.kind())
      throw Error(ErrorCode::KindMismatch,
                  e.name() + " is a " + std::string(to_string(it->second.kind())));
  }
}

bool Ontology::assert_axiom(const Axiom& axiom) {
  check_vocabulary(axiom);
  if (!asserted_.insert(axiom).second) return false;
  // Keep the asserted and inferred partitions disjoint.
  if (closure_) closure_->inferred.erase(axiom);
  ++revision_;
  return true;
}

bool Ontology::retract_axiom(const Axiom& axiom) {
  if (asserted_.erase(axiom) == 0) return false;
  ++revision_;
  return true;
}

void Ontology::check_current() const {
  if (stale())
    throw Error(ErrorCode::StaleClosure, "entailed view requested without a current closure");
}

bool Ontology::contains(const Axiom& axiom, View view) const {
  if (view == View::Asserted) return asserted_.contains(axiom);
  check_current();
  return asserted_.contains(axiom) || closure_->inferred.contains(axiom);
}

const std::set<Axiom>& Ontology::inferred() const noexcept {
  return closure_ ? closure_->inferred : kNoAxioms;
}

std::vector<Axiom> Ontology::axioms_about(AxiomType type, const Entity& ground,
                                          View view) const {
  if (is_orderless(type)) {
    auto out = axioms_with(type, ground, Position::First, view);
    auto second = axioms_with(type, ground, Position::Second, view);
    for (auto& a : second) {
      if (a.first() != ground) out.push_back(std::move(a));
    }
    return out;
  }
  return axioms_with(type, ground, Position::First, view);
}

std::vector<Axiom> Ontology::axioms_with(AxiomType type, const Entity& entity,
                                         Position position, View view) const {
  if (view == View::Entailed) check_current();
  std::vector<Axiom> out;
  auto collect = [&](const std::set<Axiom>& axioms) {
    if (position == Position::First) {
      scan(axioms, type, &entity, [&](const Axiom& a) { out.push_back(a); });
    } else {
      scan(axioms, type, nullptr, [&](const Axiom& a) {
        if (a.second() == entity) out.push_back(a);
      });
    }
  };
  collect(asserted_);
  if (view == View::Entailed) collect(closure_->inferred);
  return out;
}

std::vector<Axiom> Ontology::axioms_of(AxiomType type, View view) const {
  if (view == View::Entailed) check_current();
  std::vector<Axiom> out;
  scan(asserted_, type, nullptr, [&](const Axiom& a) { out.push_back(a); });
  if (view == View::Entailed) {
    scan(closure_->inferred, type, nullptr, [&](const Axiom& a) { out.push_back(a); });
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Entity> Ontology::entities(EntityKind kind) const {
  std::vector<Entity> out;
  for (const auto& [iri, entity] : vocabulary_) {
    if (entity.kind() == kind) out.push_back(entity);
  }
  return out;
}

const Closure& Ontology::closure() const {
  check_current();
  return *closure_;
}

void Ontology::install(Closure closure) {
  closure.generation = revision_;
  for (auto it = closure.inferred.begin(); it != closure.inferred.end();) {
    it = asserted_.contains(*it) ? closure.inferred.erase(it) : std::next(it);
  }
  closure_ = std::move(closure);
}

}  // namespace ontodesc
