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

// Forward-chaining saturation over the axiom store.
//
// Rules run in strata, each to fixpoint:
//
//   1. classes      SubClassOf reflexive-transitive, EquivalentClasses as
//                   mutual subsumption, every class under THING and over
//                   NOTHING, definitions whose top level is (or intersects)
//                   a named class subsume it; mutual subsumption yields
//                   EquivalentClasses.
//   2. properties   SubPropertyOf reflexive-transitive, EquivalentProperties
//                   likewise; InverseProperties is read in both directions.
//   3. sameAs       SameIndividual equivalence closure.
//   4. assertions   property assertions closed under super-properties,
//                   inverses, symmetry, transitivity, reflexivity, two-step
//                   chains and sameAs; self-loops on irreflexive properties
//                   are never derived.
//   5. memberships  asserted types, THING, domain/range typing, inheritance
//                   along SubClassOf and recognition of defined classes.
//
// Recognition counts known fillers and treats individuals as distinct unless
// sameAs-related. That makes Max non-monotone, so stratum 5 is evaluated as
// an alternating fixpoint and keeps the facts that hold in every round; with
// no cyclic dependence through Max this is the unique model. Nothing is ever
// invented, so saturation terminates on every input.
//
// Consistency checks run on the final closure and are reported as
// violations, never as errors.

#pragma once

#include <cstdint>
#include <vector>

#include "ontodesc/closure.hpp"
#include "ontodesc/entity.hpp"

namespace ontodesc {

class Ontology;

enum class Execution : std::uint8_t {
  Serial,    // reference path
  Parallel,  // OpenMP membership kernel
};

struct ReasonerOptions {
  Execution execution = Execution::Parallel;
};

/// Computes the closure without touching the ontology.
Closure saturate(const Ontology& ontology, const ReasonerOptions& options = {});

/// Saturates, installs the inferred partition and returns the closure.
Closure reason(Ontology& ontology, const ReasonerOptions& options = {});

// Queries over the entailed view. All of them throw StaleClosure unless
// `closure` is the one installed for the ontology's current revision.

/// Membership in asserted ∪ inferred. Reflexive SubClassOf, SubPropertyOf,
/// Equivalent* and SameIndividual axioms over declared entities count as
/// entailed.
bool is_entailed(const Ontology& ontology, const Closure& closure, const Axiom& axiom);

/// Named classes directly below `cls`, excluding classes equivalent to it or
/// to NOTHING; {NOTHING} when there are none, {} for NOTHING itself.
std::vector<Entity> direct_subclasses(const Ontology& ontology, const Closure& closure,
                                      const Entity& cls);
/// Mirror of direct_subclasses; {THING} when nothing is above, {} for THING.
std::vector<Entity> direct_superclasses(const Ontology& ontology, const Closure& closure,
                                        const Entity& cls);

/// Entailed classes of an individual. With `most_specific_only`, drops every
/// class that has a strict entailed subclass the individual also belongs to.
std::vector<Entity> types_of(const Ontology& ontology, const Closure& closure,
                             const Entity& individual, bool most_specific_only = false);
std::vector<Entity> instances_of(const Ontology& ontology, const Closure& closure,
                                 const Entity& cls);
std::vector<Entity> fillers(const Ontology& ontology, const Closure& closure,
                            const Entity& individual, const Entity& property);

}  // namespace ontodesc
