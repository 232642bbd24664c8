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

#include "ontodesc/class_expression.hpp"

#include <algorithm>

#include "ontodesc/error.hpp"

namespace ontodesc {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidExpression, why);
}

void validate_atom(const ClassExpression& e) {
  if (!e.filler().is_class()) invalid("filler must be a named class: " + e.filler().name());
  if (e.op() == ClassExpression::Op::Named) return;
  if (!e.property().is_object_property())
    invalid("restriction property must be an object property: " + e.property().name());
  if (e.op() == ClassExpression::Op::Min && e.cardinality() < 1)
    invalid("minimum cardinality must be at least 1");
}

}  // namespace

ClassExpression ClassExpression::named(Entity cls) {
  ClassExpression e;
  e.op_ = Op::Named;
  e.filler_ = std::move(cls);
  return e;
}

ClassExpression ClassExpression::all_of(std::vector<ClassExpression> operands) {
  ClassExpression e;
  e.op_ = Op::And;
  e.operands_ = std::move(operands);
  return e;
}

ClassExpression ClassExpression::any_of(std::vector<ClassExpression> operands) {
  ClassExpression e;
  e.op_ = Op::Or;
  e.operands_ = std::move(operands);
  return e;
}

ClassExpression ClassExpression::some(Entity property, Entity filler) {
  ClassExpression e;
  e.op_ = Op::Some;
  e.property_ = std::move(property);
  e.filler_ = std::move(filler);
  return e;
}

ClassExpression ClassExpression::only(Entity property, Entity filler) {
  ClassExpression e = some(std::move(property), std::move(filler));
  e.op_ = Op::Only;
  return e;
}

ClassExpression ClassExpression::at_least(std::uint32_t cardinality, Entity property,
                                          Entity filler) {
  ClassExpression e = some(std::move(property), std::move(filler));
  e.op_ = Op::Min;
  e.cardinality_ = cardinality;
  return e;
}

ClassExpression ClassExpression::at_most(std::uint32_t cardinality, Entity property,
                                         Entity filler) {
  ClassExpression e = some(std::move(property), std::move(filler));
  e.op_ = Op::Max;
  e.cardinality_ = cardinality;
  return e;
}

void ClassExpression::validate() const {
  if (is_atom()) {
    validate_atom(*this);
    return;
  }
  if (operands_.size() < 2) invalid("And/Or need at least two operands");
  for (const auto& member : operands_) {
    if (member.is_atom()) {
      validate_atom(member);
      continue;
    }
    // Only Or(..., And(atoms), ...) nests; anything deeper is a tree.
    if (op_ == Op::And || member.op() == Op::Or)
      invalid("nested expression too deep: " + render(*this));
    if (member.operands_.size() < 2) invalid("And/Or need at least two operands");
    for (const auto& atom : member.operands_) {
      if (!atom.is_atom()) invalid("nested expression too deep: " + render(*this));
      validate_atom(atom);
    }
  }
}

void ClassExpression::collect_entities(std::vector<Entity>& out) const {
  if (!filler_.empty()) out.push_back(filler_);
  if (!property_.empty()) out.push_back(property_);
  for (const auto& member : operands_) member.collect_entities(out);
}

std::string render(const ClassExpression& expr) {
  using Op = ClassExpression::Op;
  auto list = [&](const char* head) {
    std::string out = head;
    out += '(';
    for (std::size_t i = 0; i < expr.operands().size(); ++i) {
      if (i) out += ' ';
      out += render(expr.operands()[i]);
    }
    out += ')';
    return out;
  };
  const std::string tail = expr.property().name() + " " + expr.filler().name() + ")";
  switch (expr.op()) {
    case Op::Named: return expr.filler().name();
    case Op::And: return list("And");
    case Op::Or: return list("Or");
    case Op::Some: return "Some(" + tail;
    case Op::Only: return "Only(" + tail;
    case Op::Min: return "Min(" + std::to_string(expr.cardinality()) + " " + tail;
    case Op::Max: return "Max(" + std::to_string(expr.cardinality()) + " " + tail;
  }
  return {};
}

std::strong_ordering ClassExpression::operator<=>(const ClassExpression& other) const {
  if (auto c = op_ <=> other.op_; c != 0) return c;
  if (auto c = cardinality_ <=> other.cardinality_; c != 0) return c;
  if (auto c = property_ <=> other.property_; c != 0) return c;
  if (auto c = filler_ <=> other.filler_; c != 0) return c;
  const std::size_t n = std::min(operands_.size(), other.operands_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = operands_[i] <=> other.operands_[i]; c != 0) return c;
  }
  return operands_.size() <=> other.operands_.size();
}

}  // namespace ontodesc
