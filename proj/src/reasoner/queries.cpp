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

#include <algorithm>

#include "ontodesc/error.hpp"
#include "ontodesc/ontology.hpp"
#include "ontodesc/reasoner.hpp"

namespace ontodesc {

namespace {

void require_current(const Ontology& o, const Closure& closure) {
  if (o.stale() || closure.generation != o.revision())
    throw Error(ErrorCode::StaleClosure, "query against a stale closure");
}

bool entailed(const Ontology& o, const Closure& closure, const Axiom& axiom) {
  return o.asserted().contains(axiom) || closure.inferred.contains(axiom);
}

bool subsumed(const Ontology& o, const Closure& closure, const Entity& sub, const Entity& sup) {
  return sub == sup || entailed(o, closure, Axiom::sub_class(sub, sup));
}

bool declared(const Ontology& o, const Entity& e) {
  auto found = o.lookup(e.name());
  return found && *found == e;
}

// Classes strictly related to `cls` along `position`, without the ones
// equivalent to `cls` or to `bound`.
std::vector<Entity> strict_neighbours(const Ontology& o, const Closure& closure,
                                      const Entity& cls, Position position,
                                      const Entity& bound) {
  const bool below = position == Position::Second;
  std::vector<Entity> candidates;
  for (const Axiom& a : o.axioms_with(AxiomType::SubClassOf, cls, position, View::Entailed)) {
    const Entity& other = below ? a.first() : a.second();
    if (below ? subsumed(o, closure, cls, other) : subsumed(o, closure, other, cls)) continue;
    if (below ? subsumed(o, closure, other, bound) : subsumed(o, closure, bound, other)) continue;
    candidates.push_back(other);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

// Keeps the candidates with no other candidate strictly between them and the
// queried class.
std::vector<Entity> direct(const Ontology& o, const Closure& closure,
                           const std::vector<Entity>& candidates, bool below) {
  std::vector<Entity> out;
  for (const Entity& c : candidates) {
    const bool covered = std::any_of(candidates.begin(), candidates.end(), [&](const Entity& d) {
      if (d == c) return false;
      const bool between = below ? subsumed(o, closure, c, d) : subsumed(o, closure, d, c);
      const bool equivalent = subsumed(o, closure, c, d) && subsumed(o, closure, d, c);
      return between && !equivalent;
    });
    if (!covered) out.push_back(c);
  }
  return out;
}

}  // namespace

bool is_entailed(const Ontology& o, const Closure& closure, const Axiom& axiom) {
  require_current(o, closure);
  switch (axiom.type()) {
    case AxiomType::SubClassOf:
    case AxiomType::EquivalentClasses:
    case AxiomType::SubPropertyOf:
    case AxiomType::EquivalentProperties:
    case AxiomType::SameIndividual:
      if (axiom.first() == axiom.second() && declared(o, axiom.first())) return true;
      break;
    default:
      break;
  }
  return entailed(o, closure, axiom);
}

std::vector<Entity> direct_subclasses(const Ontology& o, const Closure& closure,
                                      const Entity& cls) {
  require_current(o, closure);
  if (cls.is_nothing()) return {};
  auto out = direct(o, closure,
                    strict_neighbours(o, closure, cls, Position::Second, Entity::nothing()),
                    true);
  if (out.empty()) out.push_back(Entity::nothing());
  return out;
}

std::vector<Entity> direct_superclasses(const Ontology& o, const Closure& closure,
                                        const Entity& cls) {
  require_current(o, closure);
  if (cls.is_thing()) return {};
  auto out = direct(o, closure,
                    strict_neighbours(o, closure, cls, Position::First, Entity::thing()),
                    false);
  if (out.empty()) out.push_back(Entity::thing());
  return out;
}

std::vector<Entity> types_of(const Ontology& o, const Closure& closure,
                             const Entity& individual, bool most_specific_only) {
  require_current(o, closure);
  std::vector<Entity> types;
  for (const Axiom& a :
       o.axioms_with(AxiomType::ClassAssertion, individual, Position::First, View::Entailed))
    types.push_back(a.second());
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  if (!most_specific_only) return types;
  std::vector<Entity> out;
  for (const Entity& t : types) {
    const bool refined = std::any_of(types.begin(), types.end(), [&](const Entity& u) {
      return u != t && subsumed(o, closure, u, t) && !subsumed(o, closure, t, u);
    });
    if (!refined) out.push_back(t);
  }
  return out;
}

std::vector<Entity> instances_of(const Ontology& o, const Closure& closure, const Entity& cls) {
  require_current(o, closure);
  std::vector<Entity> out;
  for (const Axiom& a :
       o.axioms_with(AxiomType::ClassAssertion, cls, Position::Second, View::Entailed))
    out.push_back(a.first());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Entity> fillers(const Ontology& o, const Closure& closure, const Entity& individual,
                            const Entity& property) {
  require_current(o, closure);
  std::vector<Entity> out;
  for (const Axiom& a :
       o.axioms_with(AxiomType::PropertyAssertion, individual, Position::First, View::Entailed))
    if (a.second() == property) out.push_back(a.third());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ontodesc
