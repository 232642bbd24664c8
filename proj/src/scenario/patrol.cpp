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
#include <random>

#include "ontodesc/reasoner.hpp"
#include "ontodesc/scenario.hpp"

namespace ontodesc::scenario {

namespace {

struct VisibleDoor {
  CompoundDescriptor descriptor;
  std::vector<Entity> leads_to;  // other locations, sorted
  bool open = false;
};

std::size_t filler_count(const OntologyHandle& handle, const Entity& robot) {
  return handle.inspect([&](const Ontology& o) {
    return fillers(o, o.closure(), robot, Entity::object_property(kIsIn)).size();
  });
}

}  // namespace

void patrol_setup(OntologyHandle handle) {
  CompoundDescriptor c = full_class(handle, Entity::owl_class(kClose));
  c.part(Expression::SuperClass).add(Entity::owl_class(kDoor));
  c.write();
  c.set_ground(Entity::owl_class(kOpen));
  c.part(Expression::DisjointClass).add(Entity::owl_class(kClose));
  c.write();
}

std::string render(const PatrolStep& step) {
  std::string out = "step=" + std::to_string(step.index) + " location=" + step.location.name() +
                    " doors=";
  for (std::size_t i = 0; i < step.doors.size(); ++i) {
    if (i) out += ",";
    out += step.doors[i].door.name() + ":" + (step.doors[i].open ? kOpen : kClose);
  }
  return out + " via=" + step.via.name() + " to=" + step.to.name();
}

std::vector<PatrolStep> patrol(OntologyHandle handle, const Entity& robot, std::size_t steps,
                               std::uint64_t seed,
                               const std::function<void(const PatrolStep&)>& on_step) {
  std::mt19937_64 engine(seed);
  const Entity is_in = Entity::object_property(kIsIn);
  const Entity has_door = Entity::object_property(kHasDoor);
  const Entity is_door_of = Entity::object_property(kIsDoorOf);

  patrol_setup(handle);
  reason_consistent(handle);

  std::vector<PatrolStep> trace;
  for (std::size_t index = 1; index <= steps; ++index) {
    CompoundDescriptor agent = world_descriptor(handle, robot);
    agent.read();
    auto here = agent.build_individuals_by_property(is_in);
    if (here.size() != 1)
      throw Error(ErrorCode::Precondition,
                  robot.name() + " must have exactly one " + kIsIn + " filler");
    const CompoundDescriptor& location = here.front();

    std::vector<VisibleDoor> doors;
    for (CompoundDescriptor& d : location.build_individuals_by_property(has_door)) {
      if (d.label() != "V") continue;
      std::vector<Entity> leads_to;
      for (const Entity& other : d.part(Expression::PropertyValue).linked_individuals(is_door_of))
        if (other != location.ground()) leads_to.push_back(other);
      doors.push_back({std::move(d), std::move(leads_to), false});
    }
    const bool crossable = std::any_of(doors.begin(), doors.end(),
                                       [](const VisibleDoor& d) { return !d.leads_to.empty(); });
    if (!crossable)
      throw Error(ErrorCode::Precondition,
                  "no door leads out of " + location.ground().name());

    std::vector<const VisibleDoor*> open;
    while (open.empty()) {
      for (VisibleDoor& d : doors) d.open = (engine() >> 63) & 1U;
      for (const VisibleDoor& d : doors)
        if (d.open && !d.leads_to.empty()) open.push_back(&d);
    }
    const VisibleDoor& via = *open[engine() % open.size()];

    PatrolStep step;
    step.index = index;
    step.location = location.ground();
    for (VisibleDoor& d : doors) {
      set_door_open(d.descriptor, d.open);
      d.descriptor.part(Expression::Type).write();
      step.doors.push_back({d.descriptor.ground(), d.open});
    }
    step.via = via.descriptor.ground();
    step.to = via.leads_to.front();

    Descriptor& position = agent.part(Expression::PropertyValue);
    position.remove(Link{is_in, step.location});
    position.add(Link{is_in, step.to});
    position.write();

    reason_consistent(handle);
    if (filler_count(handle, robot) != 1)
      throw Error(ErrorCode::Inconsistent, robot.name() + " lost its single location");
    if (on_step) on_step(step);
    trace.push_back(std::move(step));
  }
  return trace;
}

}  // namespace ontodesc::scenario
