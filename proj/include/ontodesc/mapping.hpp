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

#include <span>
#include <vector>

#include "ontodesc/axiom.hpp"
#include "ontodesc/element.hpp"
#include "ontodesc/expression.hpp"

namespace ontodesc {

// Bijection between descriptor elements and axioms.
//
//   PS PJ PE PI   Entity (property)     PS(x, y), PJ(x, y), PE(x, y), PI(x, y)
//   PD PR         Restriction RV, OV    PD(x, C), PR(x, C | datatype)
//   PF PX PY PT   VoidElement           PF(x) ...
//   CS            Entity (class)        CS(y, x)
//   CSup          Entity (class)        CS(x, y)
//   CE CJ         Entity (class)        CE(x, y), CJ(x, y)
//   CD            whole Restriction list, one CD(x, expr)
//   CA            Entity (individual)   AC(y, x)
//   AC            Entity (class)        AC(x, y)
//   AV            Link                  AV(x, p, filler)
//   AS AD         Entity (individual)   AS(x, y), AD(x, y)

/// Throws IllegalEntityVariant when the element does not fit the tag,
/// UnsupportedRestriction for PD/PR restrictions other than a plain class,
/// and KindMismatch when ground or element kinds violate the axiom typing.
Axiom to_owl(Expression tag, const Entity& ground, const Element& element);

/// CD only: the list becomes one definition. Throws IllegalEntityVariant for
/// empty or malformed lists.
Axiom to_owl(Expression tag, const Entity& ground, std::span<const Element> elements);

/// Inverse of to_owl for single-element tags. Throws TagMismatch when the
/// axiom has another type (or the tag is CD), GroundMismatch when the ground
/// is not in the tag's ground position.
Element from_owl(Expression tag, const Entity& ground, const Axiom& axiom);

/// Restriction list of a CD axiom on `ground`.
std::vector<Element> definition_from_owl(const Entity& ground, const Axiom& axiom);

/// Whether `axiom` is of the tag's type with `ground` in its ground position.
bool is_about(Expression tag, const Entity& ground, const Axiom& axiom);

}  // namespace ontodesc
