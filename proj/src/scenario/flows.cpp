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

#include "ontodesc/reasoner.hpp"
#include "ontodesc/scenario.hpp"

namespace ontodesc::scenario {

Entity require(const OntologyHandle& handle, const std::string& iri, EntityKind kind) {
  auto found = handle.inspect([&](const Ontology& o) { return o.lookup(iri); });
  if (!found || found->kind() != kind)
    throw Error(ErrorCode::UnknownEntity,
                "no " + std::string(to_string(kind)) + " named " + iri);
  return *found;
}

void reason_consistent(OntologyHandle& handle) {
  const Closure closure = handle.reason();
  if (closure.consistent) return;
  std::string message = "ontology is inconsistent:";
  for (const Violation& v : closure.violations) message += " " + v.rule;
  throw Error(ErrorCode::Inconsistent, message);
}

Example1Result run_example1(OntologyHandle handle, const std::string& new_location,
                            const std::string& connected, const std::string& door) {
  const Entity connected_location = require(handle, connected, EntityKind::Individual);
  const Entity door_entity = Entity::individual(door);
  const Entity location = Entity::individual(new_location);
  const Link link{Entity::object_property(kHasDoor), door_entity};
  reason_consistent(handle);

  // Both sides are read before either writes; the new location may already
  // carry assertions of its own.
  CompoundDescriptor old_side = location_descriptor(handle, connected_location);
  CompoundDescriptor new_side = location_descriptor(handle, location);
  old_side.read();
  new_side.read();
  for (CompoundDescriptor* side : {&old_side, &new_side}) {
    side->part(Expression::PropertyValue).add(link);
    side->part(Expression::PropertyValue).write();
  }

  reason_consistent(handle);
  new_side.read();

  Example1Result result;
  for (const Element& e : new_side.part(Expression::Type).elements())
    result.types.push_back(std::get<Entity>(e));
  for (const Element& e : new_side.part(Expression::PropertyValue).elements())
    result.links.push_back(std::get<Link>(e));
  return result;
}

std::vector<std::pair<Entity, Entity>> reachable(OntologyHandle handle, const Entity& robot) {
  reason_consistent(handle);
  CompoundDescriptor agent = location_descriptor(handle, robot);
  agent.read();
  const Entity is_in = Entity::object_property(kIsIn);
  auto here = agent.build_individuals_by_property(is_in);
  if (here.empty())
    throw Error(ErrorCode::Precondition, robot.name() + " has no " + kIsIn + " filler");

  std::vector<std::pair<Entity, Entity>> out;
  for (const CompoundDescriptor& location : here) {
    const Entity connected_to = Entity::object_property(kIsConnectedTo);
    for (const CompoundDescriptor& next : location.build_individuals_by_property(connected_to)) {
      for (const CompoundDescriptor& h : next.build(Expression::Type))
        if (is_leaf(h)) out.emplace_back(next.ground(), h.ground());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ontodesc::scenario
