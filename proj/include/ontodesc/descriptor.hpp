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

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "ontodesc/element.hpp"
#include "ontodesc/expression.hpp"
#include "ontodesc/handle.hpp"
#include "ontodesc/mapping.hpp"

namespace ontodesc {

struct Intent {
  enum class Direction : std::uint8_t { Read, Write };
  enum class Change : std::uint8_t { Add, Remove };
  enum class Target : std::uint8_t { Descriptor, Ontology };

  Direction direction = Direction::Read;
  Change change = Change::Add;
  /// Set for read intents and for writes of single-element tags.
  std::optional<Element> element;
  /// Set for write intents. A read intent carries the axiom its element maps
  /// to, which is empty for a definition list that does not form a valid
  /// definition.
  std::optional<Axiom> axiom;
  Target target = Target::Descriptor;
  bool succeeded = true;
};

std::string render(const Intent& intent);

/// One expression tag applied to one ground, with the element list Y that
/// mirrors the matching axioms of the ontology.
///
/// Y keeps insertion order and holds no duplicates. Order only matters for
/// definitions; read() sorts every other tag.
class Descriptor {
 public:
  /// Throws KindMismatch if the ground does not fit the tag's partition.
  Descriptor(OntologyHandle handle, Expression tag, Entity ground);

  Expression tag() const noexcept { return tag_; }
  const Entity& ground() const noexcept { return ground_; }
  const OntologyHandle& handle() const noexcept { return handle_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  /// Re-targets the descriptor; Y is kept.
  void set_ground(Entity ground);

  /// Appends an element unless already present. Throws IllegalEntityVariant,
  /// UnsupportedRestriction or KindMismatch when it cannot map to an axiom.
  bool add(Element element);
  bool remove(const Element& element);
  void clear() { elements_.clear(); }
  bool contains(const Element& element) const;

  /// Entailed axioms of this tag about the ground. CS and CSup list direct
  /// neighbours and equivalent classes, falling back to {NOTHING} or {THING};
  /// every other tag lists all entailed axioms. Not part of the stable
  /// surface. Throws StaleClosure without a current closure.
  std::set<Axiom> query() const;

  /// Replaces Y by the mapped query result. Throws MappingError when a class
  /// has more than one definition.
  std::vector<Intent> read();

  /// Makes the asserted axioms of this tag about the ground equal to the
  /// mapped Y, declaring entities that are missing. Never touches inferred
  /// axioms; leaves the closure stale if anything changed.
  std::vector<Intent> write();

  /// Entities that build() would ground new descriptors on. Throws
  /// UndefinedBuild for the characteristic tags and for definition, domain
  /// or range lists holding anything other than plain classes.
  std::vector<Entity> build_grounds() const;

  /// Calls `factory(ground)` for each build ground, reads each result and
  /// returns them.
  template <class Factory>
  auto build(Factory&& factory) const {
    return build_from(build_grounds(), factory);
  }

  /// AV only: descriptors grounded on each distinct property of Y.
  template <class Factory>
  auto build_properties(Factory&& factory) const {
    return build_from(link_properties(), factory);
  }

  /// AV only: descriptors grounded on the individuals linked through `property`.
  template <class Factory>
  auto build_individuals_by_property(const Entity& property, Factory&& factory) const {
    return build_from(linked_individuals(property), factory);
  }

  /// Y^AV fillers of `property`.
  std::vector<Entity> linked_individuals(const Entity& property) const;
  std::vector<Entity> link_properties() const;

 private:
  template <class Factory>
  static auto build_from(const std::vector<Entity>& grounds, Factory& factory) {
    using Built = std::decay_t<decltype(factory(std::declval<const Entity&>()))>;
    std::vector<Built> out;
    out.reserve(grounds.size());
    for (const Entity& g : grounds) {
      out.push_back(factory(g));
      out.back().read();
    }
    return out;
  }

  void require_links() const;
  std::set<Axiom> mapped() const;
  std::vector<Element> decode(const std::set<Axiom>& axioms) const;
  std::optional<Axiom> axiom_of(const Element& element, const std::vector<Element>& list) const;

  OntologyHandle handle_;
  Expression tag_;
  Entity ground_;
  std::vector<Element> elements_;
};

}  // namespace ontodesc
