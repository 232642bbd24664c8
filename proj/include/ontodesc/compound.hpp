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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ontodesc/descriptor.hpp"
#include "ontodesc/error.hpp"

namespace ontodesc {

/// A part of a compound failed; carries the intents of the parts that ran.
class CompoundError : public Error {
 public:
  CompoundError(const Error& cause, Expression tag, std::vector<Intent> intents);

  Expression tag() const noexcept { return tag_; }
  const std::vector<Intent>& intents() const noexcept { return intents_; }

 private:
  Expression tag_;
  std::vector<Intent> intents_;
};

/// Several descriptors of one partition sharing a ground. Parts run in
/// construction order.
class CompoundDescriptor {
 public:
  using Factory = std::function<CompoundDescriptor(const Entity&)>;

  /// Throws TagMismatch for mixed partitions or repeated tags, KindMismatch
  /// when the ground does not fit the partition.
  CompoundDescriptor(OntologyHandle handle, Entity ground, std::vector<Expression> tags,
                     std::string label = {});

  const Entity& ground() const noexcept { return ground_; }
  const OntologyHandle& handle() const noexcept { return handle_; }
  /// Free-form name of the configuration that produced this compound.
  const std::string& label() const noexcept { return label_; }
  const std::vector<Descriptor>& parts() const noexcept { return parts_; }

  bool has(Expression tag) const;
  /// Throws MissingTag.
  Descriptor& part(Expression tag);
  const Descriptor& part(Expression tag) const;

  /// Re-grounds every part; the element lists are kept.
  void set_ground(Entity ground);

  /// Part reads (writes) in order, intents concatenated. The first failure
  /// stops the sequence and is rethrown as CompoundError; earlier parts are
  /// not rolled back.
  std::vector<Intent> read();
  std::vector<Intent> write();

  /// Factory used by build(tag).
  void set_factory(Expression tag, Factory factory);
  /// Factory used by build_properties().
  void set_property_factory(Factory factory);

  /// Builds through the part's elements with the tag's factory. Throws
  /// MissingTag, or UndefinedBuild when no factory is set.
  std::vector<CompoundDescriptor> build(Expression tag) const;
  std::vector<CompoundDescriptor> build_properties() const;
  std::vector<CompoundDescriptor> build_individuals_by_property(const Entity& property) const;

 private:
  const Factory& factory(Expression tag) const;
  template <class Op>
  std::vector<Intent> run(Op op);

  OntologyHandle handle_;
  Entity ground_;
  std::string label_;
  std::vector<Descriptor> parts_;
  std::map<Expression, Factory> factories_;
  Factory property_factory_;
};

/// Property compound: every property tag, or PS PJ PE PD PR PF for data
/// properties. Builds property compounds.
CompoundDescriptor full_property(OntologyHandle handle, Entity property);
/// Class compound over CD, CS, CSup, CE, CJ, CA. CA builds individual
/// compounds, the other class tags build class compounds.
CompoundDescriptor full_class(OntologyHandle handle, Entity cls);
/// Individual compound over AC, AV, AS, AD. AC builds class compounds, AV,
/// AS and AD build individual compounds, AV properties build property ones.
CompoundDescriptor full_individual(OntologyHandle handle, Entity individual);

}  // namespace ontodesc
