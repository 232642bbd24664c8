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
#include <set>
#include <string>
#include <vector>

#include "ontodesc/axiom.hpp"

namespace ontodesc {

/// A consistency check that failed, with the axioms that triggered it.
struct Violation {
  std::string rule;
  std::vector<Axiom> axioms;

  bool operator==(const Violation&) const = default;
};

/// Result of one saturation run.
struct Closure {
  /// Entailed axioms that are not asserted.
  std::set<Axiom> inferred;
  bool consistent = true;
  std::vector<Violation> violations;
  /// Ontology revision this closure was computed for.
  std::uint64_t generation = 0;
};

}  // namespace ontodesc
