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

#include "ontodesc/scenario.hpp"

#include <algorithm>

#include "ontodesc/reasoner.hpp"

namespace ontodesc::scenario {

namespace {

const Expression kType = Expression::Type;
const Expression kValue = Expression::PropertyValue;

bool has_type(const OntologyHandle& handle, const Entity& individual, const char* cls) {
  return handle.inspect([&](const Ontology& o) {
    const auto types = types_of(o, o.closure(), individual);
    return std::find(types.begin(), types.end(), Entity::owl_class(cls)) != types.end();
  });
}

}  // namespace

CompoundDescriptor hierarchy_descriptor(OntologyHandle handle, Entity cls) {
  return CompoundDescriptor(std::move(handle), std::move(cls), {Expression::SubClass}, "H");
}

bool is_leaf(const CompoundDescriptor& h) {
  const auto& below = h.part(Expression::SubClass).elements();
  return below.size() == 1 && below.front() == Element(Entity::nothing());
}

CompoundDescriptor location_descriptor(OntologyHandle handle, Entity individual) {
  CompoundDescriptor b(handle, std::move(individual), {kType, kValue}, "B");
  b.set_factory(kValue, [handle](const Entity& e) { return location_descriptor(handle, e); });
  b.set_factory(kType, [handle](const Entity& e) { return hierarchy_descriptor(handle, e); });
  return b;
}

CompoundDescriptor world_descriptor(OntologyHandle handle, Entity individual) {
  CompoundDescriptor w(handle, std::move(individual), {kType, kValue}, "W");
  w.set_factory(kValue, [handle](const Entity& e) {
    return has_type(handle, e, kDoor) ? door_descriptor(handle, e) : world_descriptor(handle, e);
  });
  w.set_factory(kType, [handle](const Entity& e) { return hierarchy_descriptor(handle, e); });
  return w;
}

CompoundDescriptor door_descriptor(OntologyHandle handle, Entity door) {
  CompoundDescriptor v(handle, std::move(door), {kType, kValue}, "V");
  v.set_factory(kValue, [handle](const Entity& e) { return world_descriptor(handle, e); });
  v.set_factory(kType, [handle](const Entity& e) { return hierarchy_descriptor(handle, e); });
  return v;
}

void set_door_open(CompoundDescriptor& door, bool open) {
  Descriptor& types = door.part(kType);
  const Entity opened = Entity::owl_class(kOpen);
  const Entity closed = Entity::owl_class(kClose);
  types.remove(open ? closed : opened);
  types.add(open ? opened : closed);
}

}  // namespace ontodesc::scenario
