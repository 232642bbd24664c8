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

#include "ontodesc/compound.hpp"

#include <algorithm>

namespace ontodesc {

CompoundError::CompoundError(const Error& cause, Expression tag, std::vector<Intent> intents)
    : Error(cause.code(), std::string(ontodesc::code(tag)) + " part failed: " + cause.what()),
      tag_(tag),
      intents_(std::move(intents)) {}

CompoundDescriptor::CompoundDescriptor(OntologyHandle handle, Entity ground,
                                       std::vector<Expression> tags, std::string label)
    : handle_(std::move(handle)), ground_(std::move(ground)), label_(std::move(label)) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (partition_of(tags[i]) != partition_of(tags.front()))
      throw Error(ErrorCode::TagMismatch, std::string(code(tags[i])) + " and " +
                                              std::string(code(tags.front())) +
                                              " belong to different partitions");
    if (std::find(tags.begin(), tags.begin() + static_cast<std::ptrdiff_t>(i), tags[i]) !=
        tags.begin() + static_cast<std::ptrdiff_t>(i))
      throw Error(ErrorCode::TagMismatch, "repeated tag " + std::string(code(tags[i])));
  }
  parts_.reserve(tags.size());
  for (Expression tag : tags) parts_.emplace_back(handle_, tag, ground_);
}

bool CompoundDescriptor::has(Expression tag) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Descriptor& d) { return d.tag() == tag; });
}

Descriptor& CompoundDescriptor::part(Expression tag) {
  return const_cast<Descriptor&>(std::as_const(*this).part(tag));
}

const Descriptor& CompoundDescriptor::part(Expression tag) const {
  for (const Descriptor& d : parts_)
    if (d.tag() == tag) return d;
  throw Error(ErrorCode::MissingTag, "no " + std::string(code(tag)) + " part");
}

void CompoundDescriptor::set_ground(Entity ground) {
  for (const Descriptor& d : parts_)
    if (!accepts_ground(d.tag(), ground))
      throw Error(ErrorCode::KindMismatch,
                  std::string(code(d.tag())) + " cannot be grounded on " + ground.name());
  for (Descriptor& d : parts_) d.set_ground(ground);
  ground_ = std::move(ground);
}

template <class Op>
std::vector<Intent> CompoundDescriptor::run(Op op) {
  std::vector<Intent> intents;
  for (Descriptor& d : parts_) {
    try {
      auto more = op(d);
      intents.insert(intents.end(), more.begin(), more.end());
    } catch (const Error& e) {
      throw CompoundError(e, d.tag(), std::move(intents));
    }
  }
  return intents;
}

std::vector<Intent> CompoundDescriptor::read() {
  return run([](Descriptor& d) { return d.read(); });
}

std::vector<Intent> CompoundDescriptor::write() {
  return run([](Descriptor& d) { return d.write(); });
}

void CompoundDescriptor::set_factory(Expression tag, Factory factory) {
  factories_[tag] = std::move(factory);
}

void CompoundDescriptor::set_property_factory(Factory factory) {
  property_factory_ = std::move(factory);
}

const CompoundDescriptor::Factory& CompoundDescriptor::factory(Expression tag) const {
  auto it = factories_.find(tag);
  if (it == factories_.end() || !it->second)
    throw Error(ErrorCode::UndefinedBuild, "no factory for " + std::string(code(tag)));
  return it->second;
}

std::vector<CompoundDescriptor> CompoundDescriptor::build(Expression tag) const {
  const Descriptor& d = part(tag);
  return d.build(factory(tag));
}

std::vector<CompoundDescriptor> CompoundDescriptor::build_properties() const {
  const Descriptor& d = part(Expression::PropertyValue);
  if (!property_factory_) throw Error(ErrorCode::UndefinedBuild, "no property factory");
  return d.build_properties(property_factory_);
}

std::vector<CompoundDescriptor> CompoundDescriptor::build_individuals_by_property(
    const Entity& property) const {
  const Descriptor& d = part(Expression::PropertyValue);
  return d.build_individuals_by_property(property, factory(Expression::PropertyValue));
}

CompoundDescriptor full_property(OntologyHandle handle, Entity property) {
  std::vector<Expression> tags;
  if (property.is_data_property()) {
    tags = {Expression::SubProperty, Expression::DisjointProperty, Expression::EquivalentProperty,
            Expression::Domain,      Expression::Range,            Expression::Functional};
  } else {
    for (Expression tag : kAllExpressions)
      if (partition_of(tag) == Partition::Property) tags.push_back(tag);
  }
  CompoundDescriptor out(handle, std::move(property), std::move(tags), "property");
  auto self = [handle](const Entity& e) { return full_property(handle, e); };
  for (Expression tag : {Expression::SubProperty, Expression::EquivalentProperty,
                         Expression::DisjointProperty, Expression::InverseProperty})
    if (out.has(tag)) out.set_factory(tag, self);
  return out;
}

CompoundDescriptor full_class(OntologyHandle handle, Entity cls) {
  CompoundDescriptor out(handle, std::move(cls),
                         {Expression::Definition, Expression::SubClass, Expression::SuperClass,
                          Expression::EquivalentClass, Expression::DisjointClass,
                          Expression::Instance},
                         "class");
  auto classes = [handle](const Entity& e) { return full_class(handle, e); };
  for (Expression tag : {Expression::Definition, Expression::SubClass, Expression::SuperClass,
                         Expression::EquivalentClass, Expression::DisjointClass})
    out.set_factory(tag, classes);
  out.set_factory(Expression::Instance,
                  [handle](const Entity& e) { return full_individual(handle, e); });
  return out;
}

CompoundDescriptor full_individual(OntologyHandle handle, Entity individual) {
  CompoundDescriptor out(handle, std::move(individual),
                         {Expression::Type, Expression::PropertyValue, Expression::SameIndividual,
                          Expression::DifferentIndividual},
                         "individual");
  auto individuals = [handle](const Entity& e) { return full_individual(handle, e); };
  out.set_factory(Expression::Type, [handle](const Entity& e) { return full_class(handle, e); });
  for (Expression tag : {Expression::PropertyValue, Expression::SameIndividual,
                         Expression::DifferentIndividual})
    out.set_factory(tag, individuals);
  out.set_property_factory([handle](const Entity& e) { return full_property(handle, e); });
  return out;
}

}  // namespace ontodesc
