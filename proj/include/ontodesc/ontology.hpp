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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontodesc/axiom.hpp"
#include "ontodesc/closure.hpp"
#include "ontodesc/entity.hpp"

namespace ontodesc {

enum class View { Asserted, Entailed };

/// Which argument of an axiom a lookup matches against.
enum class Position { First, Second };

/// Axiom store partitioned into RBox, TBox and ABox by axiom type.
///
/// The asserted set is only changed through assert_axiom/retract_axiom. The
/// inferred partition is replaced wholesale by install(); every mutation bumps
/// the revision and makes the installed closure stale until the next
/// reasoning run. Reads of the entailed view on a stale ontology throw
/// StaleClosure.
///
/// Not synchronized; see OntologyHandle for shared use.
class Ontology {
 public:
  Ontology();

  /// The entity named `iri`, if declared. Builtin datatypes (`xsd:*`) resolve
  /// without being part of the vocabulary.
  std::optional<Entity> lookup(std::string_view iri) const;

  /// Idempotent. Throws InvalidIri or KindClash.
  Entity declare(EntityKind kind, std::string iri);

  /// Declares every named entity the axiom mentions that is still missing.
  void declare_entities(const Axiom& axiom);

  /// Returns whether the asserted set changed. Throws UnknownEntity when an
  /// argument is undeclared and KindMismatch for ill-typed axioms.
  bool assert_axiom(const Axiom& axiom);
  bool retract_axiom(const Axiom& axiom);

  bool contains(const Axiom& axiom, View view = View::Asserted) const;

  /// Axioms of `type` whose ground (first) argument is `ground`. Orderless
  /// types match the ground in either argument.
  std::vector<Axiom> axioms_about(AxiomType type, const Entity& ground, View view) const;

  /// Axioms of `type` whose argument at `position` is `entity`.
  std::vector<Axiom> axioms_with(AxiomType type, const Entity& entity, Position position,
                                 View view) const;

  /// Every axiom of one type in the chosen view, in canonical order.
  std::vector<Axiom> axioms_of(AxiomType type, View view) const;

  const std::set<Axiom>& asserted() const noexcept { return asserted_; }
  /// Inferred partition of the installed closure (possibly stale).
  const std::set<Axiom>& inferred() const noexcept;

  /// Declared entities by IRI, including THING and NOTHING.
  const std::map<std::string, Entity, std::less<>>& vocabulary() const noexcept {
    return vocabulary_;
  }
  std::vector<Entity> entities(EntityKind kind) const;

  std::uint64_t revision() const noexcept { return revision_; }
  bool stale() const noexcept { return !closure_ || closure_->generation != revision_; }

  /// The current closure. Throws StaleClosure if missing or out of date.
  const Closure& closure() const;

  /// Replaces the inferred partition; the closure becomes current.
  void install(Closure closure);

 private:
  void check_vocabulary(const Axiom& axiom) const;
  void check_current() const;

  std::map<std::string, Entity, std::less<>> vocabulary_;
  std::set<Axiom> asserted_;
  std::optional<Closure> closure_;
  std::uint64_t revision_ = 0;
};

}  // namespace ontodesc
