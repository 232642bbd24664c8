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

#include "support/generator.hpp"

#include <algorithm>

#include "ontodesc/error.hpp"
#include "ontodesc/text_format.hpp"

namespace ontodesc::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

struct Vocabulary {
  std::vector<Entity> classes;      // user classes plus THING and NOTHING
  std::vector<Entity> user_classes;
  std::vector<Entity> object_properties;
  std::vector<Entity> data_properties;
  std::vector<Entity> individuals;
};

ClassExpression random_atom(Rng& rng, const Vocabulary& v, bool monotone) {
  const Entity& filler = pick(rng, v.user_classes);
  if (v.object_properties.empty() || chance(rng, 0.35)) return ClassExpression::named(filler);
  const Entity& p = pick(rng, v.object_properties);
  switch (uniform(rng, 0, monotone ? 1 : 3)) {
    case 0: return ClassExpression::some(p, filler);
    case 1: return ClassExpression::at_least(static_cast<std::uint32_t>(uniform(rng, 1, 2)), p, filler);
    case 2: return ClassExpression::only(p, filler);
    default: return ClassExpression::at_most(static_cast<std::uint32_t>(uniform(rng, 0, 2)), p, filler);
  }
}

ClassExpression random_conjunction(Rng& rng, const Vocabulary& v, bool monotone) {
  const int n = uniform(rng, 1, 3);
  if (n == 1) return random_atom(rng, v, monotone);
  std::vector<ClassExpression> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(random_atom(rng, v, monotone));
  return ClassExpression::all_of(std::move(atoms));
}

ClassExpression random_definition(Rng& rng, const Vocabulary& v, bool monotone) {
  if (!chance(rng, 0.3)) return random_conjunction(rng, v, monotone);
  std::vector<ClassExpression> members;
  const int n = uniform(rng, 2, 3);
  for (int i = 0; i < n; ++i) members.push_back(random_conjunction(rng, v, monotone));
  return ClassExpression::any_of(std::move(members));
}

void maybe_assert(Ontology& o, const Axiom& a) {
  try {
    o.assert_axiom(a);
  } catch (const Error&) {
    // Kind combinations the generator cannot rule out cheaply are skipped.
  }
}

}  // namespace

Entity random_literal(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return Entity::literal(LiteralValue{static_cast<std::int64_t>(uniform(rng, -50, 50))});
    case 1: return Entity::literal(LiteralValue{chance(rng, 0.5)});
    case 2: return Entity::literal(LiteralValue{uniform(rng, -400, 400) / 8.0});
    default: {
      static const std::vector<std::string> words = {"red", "two words", "say \"hi\"",
                                                     "back\\slash", "tab\there", "x", ""};
      return Entity::literal(LiteralValue{pick(rng, words)});
    }
  }
}

Ontology random_ontology(Rng& rng, const WorldShape& shape) {
  Ontology o;
  Vocabulary v;
  const int nc = uniform(rng, 1, shape.max_classes);
  const int np = uniform(rng, 1, shape.max_properties);
  const int ni = uniform(rng, 1, shape.max_individuals);
  for (int i = 0; i < nc; ++i)
    v.user_classes.push_back(o.declare(EntityKind::Class, "C" + std::to_string(i)));
  for (int i = 0; i < np; ++i) {
    const bool data = i > 0 && chance(rng, 0.25);
    Entity p = o.declare(data ? EntityKind::DataProperty : EntityKind::ObjectProperty,
                         (data ? "d" : "p") + std::to_string(i));
    (data ? v.data_properties : v.object_properties).push_back(p);
  }
  for (int i = 0; i < ni; ++i)
    v.individuals.push_back(o.declare(EntityKind::Individual, "i" + std::to_string(i)));
  v.classes = v.user_classes;
  v.classes.push_back(Entity::thing());
  v.classes.push_back(Entity::nothing());

  auto some_class = [&] { return chance(rng, 0.06) ? pick(rng, v.classes) : pick(rng, v.user_classes); };
  auto times = [&](int hi) { return uniform(rng, 0, hi); };

  // TBox
  for (int k = times(nc + 2); k > 0; --k) maybe_assert(o, Axiom::sub_class(some_class(), some_class()));
  for (int k = times(1); k > 0; --k) maybe_assert(o, Axiom::equivalent_classes(some_class(), some_class()));
  for (int k = times(2); k > 0; --k) maybe_assert(o, Axiom::disjoint_classes(some_class(), some_class()));
  for (const Entity& c : v.user_classes)
    if (chance(rng, 0.35))
      maybe_assert(o, Axiom::definition(c, random_definition(rng, v, shape.monotone)));

  // RBox
  const auto& obj = v.object_properties;
  const auto& dat = v.data_properties;
  auto same_kind_pair = [&](auto&& make) {
    const bool data = !dat.empty() && chance(rng, 0.3);
    const auto& pool = data ? dat : obj;
    maybe_assert(o, make(pick(rng, pool), pick(rng, pool)));
  };
  for (int k = times(2); k > 0; --k) same_kind_pair(Axiom::sub_property);
  if (chance(rng, 0.2)) same_kind_pair(Axiom::equivalent_properties);
  if (chance(rng, 0.2)) same_kind_pair(Axiom::disjoint_properties);
  if (chance(rng, 0.4)) maybe_assert(o, Axiom::inverse_properties(pick(rng, obj), pick(rng, obj)));
  for (int k = times(2); k > 0; --k) {
    const bool data = !dat.empty() && chance(rng, 0.3);
    const Entity& p = pick(rng, data ? dat : obj);
    maybe_assert(o, Axiom::domain(p, some_class()));
  }
  for (int k = times(2); k > 0; --k) {
    const bool data = !dat.empty() && chance(rng, 0.3);
    if (data) {
      maybe_assert(o, Axiom::range(pick(rng, dat), *Entity::datatype("xsd:integer")));
    } else {
      maybe_assert(o, Axiom::range(pick(rng, obj), some_class()));
    }
  }
  if (chance(rng, 0.3)) {
    const bool data = !dat.empty() && chance(rng, 0.3);
    maybe_assert(o, Axiom::functional(pick(rng, data ? dat : obj)));
  }
  if (chance(rng, 0.1)) maybe_assert(o, Axiom::reflexive(pick(rng, obj)));
  if (chance(rng, 0.3)) maybe_assert(o, Axiom::symmetric(pick(rng, obj)));
  if (chance(rng, 0.3)) maybe_assert(o, Axiom::transitive(pick(rng, obj)));
  if (!shape.monotone && chance(rng, 0.2)) maybe_assert(o, Axiom::irreflexive(pick(rng, obj)));
  if (chance(rng, 0.3))
    maybe_assert(o, Axiom::chain(pick(rng, obj), pick(rng, obj), pick(rng, obj)));

  // ABox
  const auto& inds = v.individuals;
  for (int k = times(ni); k > 0; --k) maybe_assert(o, Axiom::class_assertion(pick(rng, inds), some_class()));
  for (int k = times(2 * ni); k > 0; --k)
    maybe_assert(o, Axiom::property_assertion(pick(rng, inds), pick(rng, obj), pick(rng, inds)));
  if (!dat.empty())
    for (int k = times(3); k > 0; --k)
      maybe_assert(o, Axiom::property_assertion(pick(rng, inds), pick(rng, dat), random_literal(rng)));
  if (chance(rng, 0.3)) maybe_assert(o, Axiom::same_individual(pick(rng, inds), pick(rng, inds)));
  if (chance(rng, 0.3)) maybe_assert(o, Axiom::different_individuals(pick(rng, inds), pick(rng, inds)));
  return o;
}

std::string noisy_document(const Ontology& o, Rng& rng) {
  std::vector<std::string> lines;
  std::string canonical = serialize(o);
  for (std::size_t start = 0; start < canonical.size();) {
    const std::size_t end = canonical.find('\n', start);
    lines.push_back(canonical.substr(start, end - start));
    start = end + 1;
  }
  for (auto& line : lines) {
    if (line.starts_with("EquivalentClasses(") && line.find("(", 18) != std::string::npos &&
        chance(rng, 0.5))
      line = "DefineClass(" + line.substr(18);
  }
  std::shuffle(lines.begin(), lines.end(), rng);

  static const std::vector<std::string> gaps = {" ", "  ", "\t", "\n", " \n  ", "\r\n"};
  std::string out;
  if (chance(rng, 0.5)) out += "# generated document\n";
  for (const auto& line : lines) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      out += c;
      if (quoted) {
        if (c == '\\' && i + 1 < line.size()) {
          out += line[++i];
        } else if (c == '"') {
          quoted = false;
        }
        continue;
      }
      if (c == '"') {
        quoted = true;
      } else if (c == ' ') {
        out.pop_back();
        out += pick(rng, gaps);
      } else if (c == '(' && chance(rng, 0.2)) {
        out += pick(rng, gaps);
      }
    }
    if (chance(rng, 0.15)) {
      out += "  # trailing note\n";
    } else {
      out += chance(rng, 0.3) ? "\n\n" : (chance(rng, 0.3) ? " " : "\n");
    }
  }
  return out;
}

MappingCase random_mapping_case(Rng& rng, Expression tag) {
  auto name = [&](const char* prefix) { return prefix + std::to_string(uniform(rng, 0, 9)); };
  auto cls = [&] { return chance(rng, 0.1) ? (chance(rng, 0.5) ? Entity::thing() : Entity::nothing())
                                          : Entity::owl_class(name("K")); };
  auto obj = [&] { return Entity::object_property(name("op")); };
  auto dat = [&] { return Entity::data_property(name("dp")); };
  auto ind = [&] { return Entity::individual(name("a")); };

  MappingCase c{tag, {}, {}};
  switch (tag) {
    case Expression::SubProperty:
    case Expression::DisjointProperty:
    case Expression::EquivalentProperty: {
      const bool data = chance(rng, 0.5);
      c.ground = data ? dat() : obj();
      c.elements.emplace_back(data ? dat() : obj());
      break;
    }
    case Expression::InverseProperty:
      c.ground = obj();
      c.elements.emplace_back(obj());
      break;
    case Expression::Domain:
      c.ground = chance(rng, 0.5) ? dat() : obj();
      c.elements.emplace_back(Restriction::of_class(cls()));
      break;
    case Expression::Range:
      if (chance(rng, 0.5)) {
        c.ground = dat();
        static const std::vector<std::string> types = {"xsd:string", "xsd:integer",
                                                       "xsd:boolean", "xsd:double"};
        c.elements.emplace_back(Restriction::of_class(*Entity::datatype(pick(rng, types))));
      } else {
        c.ground = obj();
        c.elements.emplace_back(Restriction::of_class(cls()));
      }
      break;
    case Expression::Functional:
      c.ground = chance(rng, 0.5) ? dat() : obj();
      c.elements.emplace_back(VoidElement{});
      break;
    case Expression::Reflexive:
    case Expression::Symmetric:
    case Expression::Transitive:
      c.ground = obj();
      c.elements.emplace_back(VoidElement{});
      break;
    case Expression::SubClass:
    case Expression::SuperClass:
    case Expression::EquivalentClass:
    case Expression::DisjointClass:
      c.ground = cls();
      c.elements.emplace_back(cls());
      break;
    case Expression::Definition: {
      c.ground = Entity::owl_class(name("K"));
      const int n = uniform(rng, 1, 6);
      for (int i = 0; i < n; ++i) {
        const Connective next = i + 1 == n ? Connective::None
                                           : (chance(rng, 0.6) ? Connective::Intersection
                                                               : Connective::Union);
        const auto n_card = static_cast<std::uint32_t>(uniform(rng, 1, 4));
        switch (uniform(rng, 0, 4)) {
          case 0: c.elements.emplace_back(Restriction::of_class(cls(), next)); break;
          case 1: c.elements.emplace_back(Restriction::some(obj(), cls(), next)); break;
          case 2: c.elements.emplace_back(Restriction::all(obj(), cls(), next)); break;
          case 3: c.elements.emplace_back(Restriction::min(n_card, obj(), cls(), next)); break;
          default: c.elements.emplace_back(Restriction::max(n_card - 1, obj(), cls(), next)); break;
        }
      }
      break;
    }
    case Expression::Instance:
      c.ground = cls();
      c.elements.emplace_back(ind());
      break;
    case Expression::Type:
      c.ground = ind();
      c.elements.emplace_back(cls());
      break;
    case Expression::PropertyValue:
      c.ground = ind();
      if (chance(rng, 0.5)) {
        c.elements.emplace_back(Link{obj(), ind()});
      } else {
        c.elements.emplace_back(Link{dat(), random_literal(rng)});
      }
      break;
    case Expression::SameIndividual:
    case Expression::DifferentIndividual:
      c.ground = ind();
      c.elements.emplace_back(ind());
      break;
  }
  return c;
}

}  // namespace ontodesc::testing
