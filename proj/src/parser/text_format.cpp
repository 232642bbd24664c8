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

#include "ontodesc/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ontodesc/error.hpp"
#include "parser/lexer.hpp"

namespace ontodesc {

namespace {

using detail::Token;
using detail::TokenKind;

// A word, a string, or a call `word(args...)`.
struct Node {
  Token head;
  bool call = false;
  std::vector<Node> args;
};

class TreeReader {
 public:
  explicit TreeReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Node> statements() {
    std::vector<Node> out;
    while (peek().kind != TokenKind::End) {
      if (peek().kind != TokenKind::Word) fail("statement keyword");
      Node node = term();
      if (!node.call) fail_at(node.head, "'(' after " + node.head.text);
      out.push_back(std::move(node));
    }
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(peek(), expected); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& expected) {
    throw SyntaxError(t.line, t.column, expected);
  }

  Node term() {
    Node node;
    node.head = tokens_[pos_++];
    if (node.head.kind == TokenKind::String) return node;
    if (node.head.kind != TokenKind::Word) fail_at(node.head, "name, literal or expression");
    if (peek().kind != TokenKind::Open) return node;
    ++pos_;
    node.call = true;
    while (peek().kind != TokenKind::Close) {
      if (peek().kind == TokenKind::End || peek().kind == TokenKind::Open)
        fail("')' or argument");
      node.args.push_back(term());
    }
    ++pos_;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(const Node& node, ErrorCode code, const std::string& message) {
  throw SourceError(code, node.head.line, node.head.column, message);
}

[[noreturn]] void expected(const Node& node, const std::string& what) {
  throw SyntaxError(node.head.line, node.head.column, what);
}

const std::map<std::string_view, EntityKind, std::less<>> kDeclarations = {
    {"Class", EntityKind::Class},
    {"ObjectProperty", EntityKind::ObjectProperty},
    {"DataProperty", EntityKind::DataProperty},
    {"Individual", EntityKind::Individual},
};

enum class Slot { Class, Property, ObjectProperty, Individual, Value, ClassOrDatatype };

class Builder {
 public:
  Ontology build(const std::vector<Node>& statements) {
    for (const Node& s : statements) {
      auto it = kDeclarations.find(s.head.text);
      if (it == kDeclarations.end()) continue;
      if (s.args.size() != 1 || s.args[0].call || s.args[0].head.kind != TokenKind::Word)
        expected(s, "a single name in " + s.head.text);
      try {
        o_.declare(it->second, s.args[0].head.text);
      } catch (const Error& e) {
        fail(s.args[0], e.code(), e.what());
      }
    }
    for (const Node& s : statements) {
      if (kDeclarations.contains(s.head.text)) continue;
      const Axiom axiom = statement(s);
      try {
        o_.assert_axiom(axiom);
      } catch (const Error& e) {
        fail(s, e.code(), e.what());
      }
    }
    return std::move(o_);
  }

 private:
  Entity entity(const Node& node, Slot slot) const {
    if (node.call) expected(node, "a name");
    if (node.head.kind == TokenKind::String) {
      if (slot != Slot::Value) expected(node, "a name");
      return Entity::literal(node.head.text);
    }
    const std::string& name = node.head.text;
    if (slot == Slot::Value) {
      if (auto value = parse_literal(name)) return Entity::literal(*value);
    }
    auto found = o_.lookup(name);
    if (!found) {
      if (!is_valid_iri(name) && !name.starts_with("xsd:")) expected(node, "a name");
      fail(node, ErrorCode::UnknownEntity, "undeclared entity " + name);
    }
    const EntityKind kind = found->kind();
    bool ok = false;
    switch (slot) {
      case Slot::Class: ok = kind == EntityKind::Class; break;
      case Slot::Property:
        ok = kind == EntityKind::ObjectProperty || kind == EntityKind::DataProperty;
        break;
      case Slot::ObjectProperty: ok = kind == EntityKind::ObjectProperty; break;
      case Slot::Individual: ok = kind == EntityKind::Individual; break;
      case Slot::Value: ok = kind == EntityKind::Individual; break;
      case Slot::ClassOrDatatype:
        ok = kind == EntityKind::Class || kind == EntityKind::Datatype;
        break;
    }
    if (!ok)
      fail(node, ErrorCode::KindClash,
           name + " is a " + std::string(to_string(kind)) + " here used as another kind");
    return *found;
  }

  static void arity(const Node& s, std::size_t n) {
    if (s.args.size() != n)
      expected(s, std::to_string(n) + " argument" + (n == 1 ? "" : "s") + " in " + s.head.text);
  }

  ClassExpression expression(const Node& node) const {
    if (!node.call) return ClassExpression::named(entity(node, Slot::Class));
    const std::string& op = node.head.text;
    if (op == "And" || op == "Or") {
      std::vector<ClassExpression> operands;
      for (const Node& arg : node.args) operands.push_back(expression(arg));
      return op == "And" ? ClassExpression::all_of(std::move(operands))
                         : ClassExpression::any_of(std::move(operands));
    }
    if (op == "Some" || op == "Only") {
      arity(node, 2);
      Entity p = entity(node.args[0], Slot::ObjectProperty);
      Entity c = entity(node.args[1], Slot::Class);
      return op == "Some" ? ClassExpression::some(p, c) : ClassExpression::only(p, c);
    }
    if (op == "Min" || op == "Max") {
      arity(node, 3);
      const Node& n = node.args[0];
      auto value = n.call || n.head.kind != TokenKind::Word ? std::nullopt
                                                            : parse_literal(n.head.text);
      if (!value || !std::holds_alternative<std::int64_t>(*value) ||
          std::get<std::int64_t>(*value) < 0 ||
          std::get<std::int64_t>(*value) > std::numeric_limits<std::uint32_t>::max())
        expected(n, "a non-negative cardinality");
      const auto card = static_cast<std::uint32_t>(std::get<std::int64_t>(*value));
      Entity p = entity(node.args[1], Slot::ObjectProperty);
      Entity c = entity(node.args[2], Slot::Class);
      return op == "Min" ? ClassExpression::at_least(card, p, c)
                         : ClassExpression::at_most(card, p, c);
    }
    expected(node, "And, Or, Some, Only, Min or Max");
  }

  ClassExpression definition(const Node& node) const {
    ClassExpression expr = expression(node);
    try {
      expr.validate();
    } catch (const Error& e) {
      fail(node, e.code(), e.what());
    }
    return expr;
  }

  Axiom statement(const Node& s) const {
    const std::string& k = s.head.text;
    auto e = [&](std::size_t i, Slot slot) { return entity(s.args[i], slot); };
    auto binary = [&](Slot slot, Axiom (*make)(Entity, Entity)) {
      arity(s, 2);
      return make(e(0, slot), e(1, slot));
    };
    auto unary = [&](Axiom (*make)(Entity)) {
      arity(s, 1);
      return make(e(0, Slot::Property));
    };

    if (k == "SubClassOf") return binary(Slot::Class, Axiom::sub_class);
    if (k == "DisjointClasses") return binary(Slot::Class, Axiom::disjoint_classes);
    if (k == "EquivalentClasses") {
      arity(s, 2);
      if (!s.args[1].call) return binary(Slot::Class, Axiom::equivalent_classes);
      return Axiom::definition(e(0, Slot::Class), definition(s.args[1]));
    }
    if (k == "DefineClass") {
      arity(s, 2);
      return Axiom::definition(e(0, Slot::Class), definition(s.args[1]));
    }
    if (k == "SubPropertyOf") return binary(Slot::Property, Axiom::sub_property);
    if (k == "EquivalentProperties") return binary(Slot::Property, Axiom::equivalent_properties);
    if (k == "DisjointProperties") return binary(Slot::Property, Axiom::disjoint_properties);
    if (k == "InverseProperties") return binary(Slot::Property, Axiom::inverse_properties);
    if (k == "PropertyDomain") {
      arity(s, 2);
      return Axiom::domain(e(0, Slot::Property), e(1, Slot::Class));
    }
    if (k == "PropertyRange") {
      arity(s, 2);
      return Axiom::range(e(0, Slot::Property), e(1, Slot::ClassOrDatatype));
    }
    if (k == "FunctionalProperty") return unary(Axiom::functional);
    if (k == "SymmetricProperty") return unary(Axiom::symmetric);
    if (k == "ReflexiveProperty") return unary(Axiom::reflexive);
    if (k == "TransitiveProperty") return unary(Axiom::transitive);
    if (k == "IrreflexiveProperty") return unary(Axiom::irreflexive);
    if (k == "SubPropertyChain") {
      arity(s, 3);
      return Axiom::chain(e(0, Slot::Property), e(1, Slot::Property), e(2, Slot::Property));
    }
    if (k == "ClassAssertion") {
      arity(s, 2);
      return Axiom::class_assertion(e(1, Slot::Individual), e(0, Slot::Class));
    }
    if (k == "PropertyAssertion") {
      arity(s, 3);
      return Axiom::property_assertion(e(1, Slot::Individual), e(0, Slot::Property),
                                       e(2, Slot::Value));
    }
    if (k == "SameIndividual") return binary(Slot::Individual, Axiom::same_individual);
    if (k == "DifferentIndividuals") return binary(Slot::Individual, Axiom::different_individuals);
    expected(s, "statement keyword");
  }

  Ontology o_;
};

}  // namespace

Ontology parse(std::string_view text) {
  return Builder().build(TreeReader(detail::tokenize(text)).statements());
}

Ontology parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string serialize(const Ontology& o, bool entailed) {
  std::string out;
  for (EntityKind kind : {EntityKind::Class, EntityKind::ObjectProperty,
                          EntityKind::DataProperty, EntityKind::Individual}) {
    for (const Entity& e : o.entities(kind)) {
      if (e.is_thing() || e.is_nothing()) continue;
      out += std::string(to_string(kind)) + "(" + e.name() + ")\n";
    }
  }
  auto emit = [&](const std::set<Axiom>& axioms, std::string_view prefix) {
    for (Box box : {Box::RBox, Box::TBox, Box::ABox}) {
      std::vector<std::string> lines;
      for (const Axiom& a : axioms)
        if (a.box() == box) lines.push_back(render(a));
      std::sort(lines.begin(), lines.end());
      for (const auto& line : lines) out.append(prefix).append(line).append("\n");
    }
  };
  emit(o.asserted(), "");
  if (entailed) emit(o.closure().inferred, "# inferred: ");
  return out;
}

void write_file(const Ontology& o, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(o);
}

}  // namespace ontodesc
