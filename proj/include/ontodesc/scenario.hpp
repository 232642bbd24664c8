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

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ontodesc/compound.hpp"

namespace ontodesc::scenario {

// Vocabulary of the robot world.
inline constexpr const char* kHasDoor = "hasDoor";
inline constexpr const char* kIsDoorOf = "isDoorOf";
inline constexpr const char* kIsConnectedTo = "isConnectedTo";
inline constexpr const char* kIsIn = "isIn";
inline constexpr const char* kDoor = "DOOR";
inline constexpr const char* kOpen = "OPEN";
inline constexpr const char* kClose = "CLOSE";

// Descriptor configurations. Each is a compound with its own build factories
// and a label naming the configuration.

/// "H": a class with its CS part; see is_leaf.
CompoundDescriptor hierarchy_descriptor(OntologyHandle handle, Entity cls);
/// True when the CS part holds exactly {NOTHING}.
bool is_leaf(const CompoundDescriptor& h);

/// "B": an individual with AC and AV parts. AV builds B, AC builds H.
CompoundDescriptor location_descriptor(OntologyHandle handle, Entity individual);

/// "W": like B, but AV builds V for fillers typed DOOR and W otherwise.
CompoundDescriptor world_descriptor(OntologyHandle handle, Entity individual);
/// "V": a door; AC and AV parts, AV builds W.
CompoundDescriptor door_descriptor(OntologyHandle handle, Entity door);
/// Replaces OPEN/CLOSE in the AC part of a door descriptor. Does not write.
void set_door_open(CompoundDescriptor& door, bool open);

/// Throws UnknownEntity unless `iri` names a declared entity of `kind`.
Entity require(const OntologyHandle& handle, const std::string& iri, EntityKind kind);

/// Reasons and throws Inconsistent if the closure reports violations.
void reason_consistent(OntologyHandle& handle);

struct Example1Result {
  std::vector<Entity> types;  // AC part of the new location after the flow
  std::vector<Link> links;    // its AV part
};

/// Links `door` to `connected` and to the new location, reasons and reads the
/// new location back. The new location and the door are declared on write.
Example1Result run_example1(OntologyHandle handle, const std::string& new_location,
                            const std::string& connected, const std::string& door);

/// ⟨location, leaf class⟩ pairs for the locations connected to the robot's
/// current location, sorted. Throws Precondition if the robot is nowhere.
std::vector<std::pair<Entity, Entity>> reachable(OntologyHandle handle, const Entity& robot);

/// Declares CLOSE ⊑ DOOR, OPEN ⊑ DOOR and CLOSE disjoint from OPEN through
/// one class compound re-grounded from CLOSE to OPEN.
void patrol_setup(OntologyHandle handle);

struct DoorState {
  Entity door;
  bool open = false;
};

struct PatrolStep {
  std::size_t index = 0;
  Entity location;
  std::vector<DoorState> doors;
  Entity via;
  Entity to;
};

std::string render(const PatrolStep& step);

/// Random walk of `steps` moves. Door perception draws one bit per visible
/// door from std::mt19937_64 seeded with `seed` (the top bit of one output
/// each, in door order), redrawing the whole set until a crossable door is
/// open; the door taken is output % count over the open crossable doors in
/// name order, and leads to the first other location of that door. After
/// each move the ontology is reasoned and must stay consistent with one isIn
/// filler. Throws Precondition when no crossable door exists, Inconsistent
/// when a step breaks consistency.
std::vector<PatrolStep> patrol(OntologyHandle handle, const Entity& robot, std::size_t steps,
                               std::uint64_t seed,
                               const std::function<void(const PatrolStep&)>& on_step = {});

}  // namespace ontodesc::scenario
