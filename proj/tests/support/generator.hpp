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
#include <random>
#include <string>
#include <vector>

#include "ontodesc/element.hpp"
#include "ontodesc/expression.hpp"
#include "ontodesc/ontology.hpp"

namespace ontodesc::testing {

using Rng = std::mt19937_64;

struct WorldShape {
  int max_classes = 8;
  int max_properties = 4;
  int max_individuals = 8;
  /// Leave out Only, Max and IrreflexiveProperty, the non-monotone parts.
  bool monotone = false;
};

/// Random small ontology: at most one definition per class, every axiom kind
/// represented with some probability.
Ontology random_ontology(Rng& rng, const WorldShape& shape = {});

/// Same statements as serialize(o), shuffled, with random whitespace,
/// comments and DefineClass sugar.
std::string noisy_document(const Ontology& o, Rng& rng);

struct MappingCase {
  Expression tag;
  Entity ground;
  std::vector<Element> elements;  // one element, or a whole list for CD
};

/// A legal (tag, ground, elements) triple over freshly named entities.
MappingCase random_mapping_case(Rng& rng, Expression tag);

Entity random_literal(Rng& rng);

}  // namespace ontodesc::testing
