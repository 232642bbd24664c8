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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "ontodesc/axiom.hpp"
#include "ontodesc/error.hpp"
#include "support/generator.hpp"

using namespace ontodesc;

namespace {

const Entity kRoom = Entity::owl_class("ROOM");
const Entity kIndoor = Entity::owl_class("INDOOR");
const Entity kHasDoor = Entity::object_property("hasDoor");
const Entity kWidth = Entity::data_property("width");
const Entity kRoom1 = Entity::individual("Room1");
const Entity kDoor1 = Entity::individual("Door1");

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Precondition;
}

}  // namespace

TEST_CASE("iri validity") {
  for (const char* good : {"ROOM", "Room1", "hasDoor", "ex:thing", "a-b_c", "x.y", "é"})
    CHECK_MESSAGE(is_valid_iri(good), good);
  for (const char* bad : {"", "1room", "-x", "+x", ".x", "a b", "a(b", "a)b", "a\"b", "a#b",
                          "true", "false", "xsd:string", "a\tb"})
    CHECK_MESSAGE(!is_valid_iri(bad), bad);
}

TEST_CASE("entities are plain values") {
  CHECK(Entity::owl_class("A") == Entity::owl_class("A"));
  CHECK(Entity::owl_class("A") != Entity::individual("A"));
  CHECK(Entity::owl_class("A") < Entity::owl_class("B"));
  CHECK(Entity::thing().is_thing());
  CHECK(Entity::nothing().is_nothing());
  CHECK_FALSE(Entity::individual("THING").is_thing());
  CHECK(EntityHash{}(kRoom) == EntityHash{}(Entity::owl_class("ROOM")));
}

TEST_CASE("literal text round trips every value kind") {
  const std::vector<LiteralValue> values = {
      std::string("plain"), std::string("quote \" and \\ backslash"), std::string("tab\tnew\nline"),
      std::string(""),      std::int64_t{0},  std::int64_t{-42},
      std::numeric_limits<std::int64_t>::max(), true, false, 3.5, -0.25, 1e300, 2.0};
  for (const auto& v : values) {
    const Entity e = Entity::literal(v);
    CHECK(e.is_literal());
    REQUIRE(e.literal_value().has_value());
    CHECK(*e.literal_value() == v);
    CHECK(parse_literal(e.name()) == v);
  }
  CHECK(Entity::literal(2.0).name() == "2.0");
  CHECK(Entity::literal(std::int64_t{7}).name() == "7");
  CHECK(Entity::literal(std::string("a\"b")).name() == "\"a\\\"b\"");
  CHECK(Entity::literal(true).literal_datatype() == *Entity::datatype("xsd:boolean"));
  CHECK(Entity::literal(1.5).literal_datatype() == *Entity::datatype("xsd:double"));
  CHECK_FALSE(Entity::datatype("xsd:date").has_value());
  CHECK(code_of([] { Entity::literal(std::nan("")); }) == ErrorCode::InvalidIri);
}

TEST_CASE("random literals survive their canonical text") {
  testing::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Entity e = testing::random_literal(rng);
    const auto value = parse_literal(e.name());
    REQUIRE(value.has_value());
    CHECK(Entity::literal(*value) == e);
  }
}

TEST_CASE("malformed literal text is rejected") {
  for (const char* bad : {"\"open", "\"bad \\q escape\"", "12x", "1.2.3", "abc", "\"a\"b\""})
    CHECK_MESSAGE(!parse_literal(bad).has_value(), bad);
}

TEST_CASE("orderless axioms ignore argument order") {
  CHECK(Axiom::disjoint_classes(kRoom, kIndoor) == Axiom::disjoint_classes(kIndoor, kRoom));
  CHECK(Axiom::equivalent_classes(kRoom, kIndoor) == Axiom::equivalent_classes(kIndoor, kRoom));
  CHECK(Axiom::same_individual(kRoom1, kDoor1) == Axiom::same_individual(kDoor1, kRoom1));
  CHECK(Axiom::different_individuals(kRoom1, kDoor1) ==
        Axiom::different_individuals(kDoor1, kRoom1));
  const Entity p = Entity::object_property("p");
  CHECK(Axiom::disjoint_properties(p, kHasDoor) == Axiom::disjoint_properties(kHasDoor, p));
  CHECK(Axiom::equivalent_properties(p, kHasDoor) == Axiom::equivalent_properties(kHasDoor, p));

  CHECK(Axiom::sub_class(kRoom, kIndoor) != Axiom::sub_class(kIndoor, kRoom));
  CHECK(Axiom::inverse_properties(p, kHasDoor) != Axiom::inverse_properties(kHasDoor, p));
  for (AxiomType t : kAllAxiomTypes) {
    const bool orderless = t == AxiomType::DisjointProperties || t == AxiomType::EquivalentProperties ||
                           t == AxiomType::EquivalentClasses || t == AxiomType::DisjointClasses ||
                           t == AxiomType::SameIndividual || t == AxiomType::DifferentIndividuals;
    CHECK(is_orderless(t) == orderless);
  }
}

TEST_CASE("axiom types fall into boxes") {
  CHECK(box_of(AxiomType::SubPropertyOf) == Box::RBox);
  CHECK(box_of(AxiomType::TransitiveProperty) == Box::RBox);
  CHECK(box_of(AxiomType::SubPropertyChain) == Box::RBox);
  CHECK(box_of(AxiomType::IrreflexiveProperty) == Box::RBox);
  CHECK(box_of(AxiomType::SubClassOf) == Box::TBox);
  CHECK(box_of(AxiomType::ClassDefinition) == Box::TBox);
  CHECK(box_of(AxiomType::ClassAssertion) == Box::ABox);
  CHECK(box_of(AxiomType::DifferentIndividuals) == Box::ABox);
  CHECK(code(AxiomType::PropertyAssertion) == "AV");
  CHECK(code(AxiomType::SubClassOf) == "CS");
  CHECK(keyword(AxiomType::SubClassOf) == "SubClassOf");
}

TEST_CASE("argument positions") {
  const Axiom av = Axiom::property_assertion(kRoom1, kHasDoor, kDoor1);
  CHECK(av.first() == kRoom1);
  CHECK(av.second() == kHasDoor);
  CHECK(av.third() == kDoor1);
  const Axiom chain = Axiom::chain(Entity::object_property("r"), kHasDoor,
                                   Entity::object_property("isDoorOf"));
  CHECK(chain.first().name() == "r");
  CHECK(chain.second() == kHasDoor);
  CHECK(chain.third().name() == "isDoorOf");
  CHECK(Axiom::sub_class(kRoom, kIndoor).first() == kRoom);
}

TEST_CASE("axiom typing is validated") {
  CHECK_NOTHROW(Axiom::transitive(kHasDoor).validate());
  CHECK(code_of([] { Axiom::transitive(kWidth).validate(); }) == ErrorCode::KindMismatch);
  CHECK(code_of([] { Axiom::symmetric(kWidth).validate(); }) == ErrorCode::KindMismatch);
  CHECK(code_of([] { Axiom::inverse_properties(kWidth, kHasDoor).validate(); }) ==
        ErrorCode::KindMismatch);
  CHECK(code_of([] { Axiom::sub_property(kWidth, kHasDoor).validate(); }) == ErrorCode::KindMismatch);
  CHECK(code_of([] { Axiom::sub_class(kRoom, kRoom1).validate(); }) == ErrorCode::KindMismatch);
  CHECK(code_of([] { Axiom::class_assertion(kRoom, kRoom).validate(); }) == ErrorCode::KindMismatch);
  CHECK_NOTHROW(Axiom::functional(kWidth).validate());
  CHECK_NOTHROW(Axiom::range(kWidth, *Entity::datatype("xsd:double")).validate());
  CHECK(code_of([] { Axiom::range(kHasDoor, *Entity::datatype("xsd:double")).validate(); }) ==
        ErrorCode::KindMismatch);
  CHECK_NOTHROW(Axiom::property_assertion(kRoom1, kWidth, Entity::literal(3.5)).validate());
  CHECK(code_of([] { Axiom::property_assertion(kRoom1, kWidth, kDoor1).validate(); }) ==
        ErrorCode::KindMismatch);
  CHECK(code_of([] {
          Axiom::property_assertion(kRoom1, kHasDoor, Entity::literal(std::int64_t{1})).validate();
        }) == ErrorCode::KindMismatch);
}

TEST_CASE("class expressions keep to the flat shapes") {
  using CE = ClassExpression;
  const CE some = CE::some(kHasDoor, kRoom);
  CHECK_NOTHROW(CE::all_of({CE::named(kIndoor), some}).validate());
  CHECK_NOTHROW(CE::any_of({CE::all_of({CE::named(kIndoor), some}), CE::named(kRoom)}).validate());
  CHECK_NOTHROW(CE::at_most(0, kHasDoor, kRoom).validate());

  CHECK(code_of([&] { CE::all_of({CE::any_of({some, some}), some}).validate(); }) ==
        ErrorCode::InvalidExpression);
  CHECK(code_of([&] { CE::all_of({CE::all_of({some, some}), some}).validate(); }) ==
        ErrorCode::InvalidExpression);
  CHECK(code_of([&] { CE::at_least(0, kHasDoor, kRoom).validate(); }) == ErrorCode::InvalidExpression);
  CHECK(code_of([&] { CE::some(kWidth, kRoom).validate(); }) == ErrorCode::InvalidExpression);
  CHECK(code_of([&] { CE::some(kHasDoor, kRoom1).validate(); }) == ErrorCode::InvalidExpression);
  CHECK(code_of([&] { CE::all_of({}).validate(); }) == ErrorCode::InvalidExpression);
}

TEST_CASE("rendering") {
  using CE = ClassExpression;
  CHECK(render(Axiom::sub_class(kRoom, kIndoor)) == "SubClassOf(ROOM INDOOR)");
  CHECK(render(Axiom::property_assertion(kRoom1, kHasDoor, kDoor1)) ==
        "PropertyAssertion(hasDoor Room1 Door1)");
  CHECK(render(CE::all_of({CE::named(Entity::owl_class("LOCATION")), CE::some(kHasDoor, Entity::owl_class("DOOR"))})) ==
        "And(LOCATION Some(hasDoor DOOR))");
  CHECK(render(CE::at_least(2, kHasDoor, Entity::owl_class("DOOR"))) == "Min(2 hasDoor DOOR)");
}
