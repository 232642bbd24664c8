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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ontodesc {

enum class EntityKind : std::uint8_t {
  Class,
  ObjectProperty,
  DataProperty,
  Individual,
  Literal,
  Datatype,
};

std::string_view to_string(EntityKind kind);

using LiteralValue = std::variant<std::string, std::int64_t, bool, double>;

inline constexpr std::string_view kThingIri = "THING";
inline constexpr std::string_view kNothingIri = "NOTHING";

/// True when `text` can name a declared entity: non-empty, no whitespace,
/// none of `( ) " #`, not starting like a number, not a boolean keyword and
/// not in the reserved `xsd:` namespace.
bool is_valid_iri(std::string_view text);

/// A named OWL entity, a typed literal, or one of the builtin datatypes.
///
/// Entities are plain values: two entities are equal iff kind and name are
/// byte-equal. Literals are named by their canonical text (`"a\"b"`, `42`,
/// `3.5`, `true`), which round-trips through the text format and keeps equal
/// values equal.
class Entity {
 public:
  Entity() = default;
  Entity(EntityKind kind, std::string name) : name_(std::move(name)), kind_(kind) {}

  static Entity owl_class(std::string iri) { return {EntityKind::Class, std::move(iri)}; }
  static Entity object_property(std::string iri) {
    return {EntityKind::ObjectProperty, std::move(iri)};
  }
  static Entity data_property(std::string iri) {
    return {EntityKind::DataProperty, std::move(iri)};
  }
  static Entity individual(std::string iri) { return {EntityKind::Individual, std::move(iri)}; }
  static Entity literal(const LiteralValue& value);
  static Entity thing() { return owl_class(std::string(kThingIri)); }
  static Entity nothing() { return owl_class(std::string(kNothingIri)); }

  /// `xsd:string`, `xsd:integer`, `xsd:boolean` or `xsd:double`.
  static std::optional<Entity> datatype(std::string_view name);
  /// Datatype of a literal entity.
  Entity literal_datatype() const;

  EntityKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool empty() const noexcept { return name_.empty(); }

  bool is_class() const noexcept { return kind_ == EntityKind::Class; }
  bool is_individual() const noexcept { return kind_ == EntityKind::Individual; }
  bool is_literal() const noexcept { return kind_ == EntityKind::Literal; }
  bool is_property() const noexcept {
    return kind_ == EntityKind::ObjectProperty || kind_ == EntityKind::DataProperty;
  }
  bool is_object_property() const noexcept { return kind_ == EntityKind::ObjectProperty; }
  bool is_data_property() const noexcept { return kind_ == EntityKind::DataProperty; }
  bool is_thing() const noexcept { return is_class() && name_ == kThingIri; }
  bool is_nothing() const noexcept { return is_class() && name_ == kNothingIri; }

  /// Decoded literal value; empty for non-literals.
  std::optional<LiteralValue> literal_value() const;

  // Names compare first so canonical orderings are lexicographic by IRI.
  std::strong_ordering operator<=>(const Entity&) const = default;
  bool operator==(const Entity&) const = default;

 private:
  std::string name_;
  EntityKind kind_ = EntityKind::Class;
};

/// Canonical literal text for a value. Throws InvalidIri on non-finite doubles.
std::string literal_text(const LiteralValue& value);

/// Decodes canonical or source literal text; empty if `text` is no literal.
std::optional<LiteralValue> parse_literal(std::string_view text);

struct EntityHash {
  std::size_t operator()(const Entity& e) const noexcept;
};

}  // namespace ontodesc
