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

#include <filesystem>
#include <string>
#include <string_view>

#include "ontodesc/ontology.hpp"

namespace ontodesc {

/// Parses a `.onto` document. Declarations are collected before any axiom is
/// resolved, so they may appear anywhere in the document.
///
/// Throws SyntaxError for malformed input, and SourceError with UnknownEntity,
/// KindClash, KindMismatch or InvalidExpression for well-formed statements
/// that cannot be asserted. Every error carries a line and column.
Ontology parse(std::string_view text);
Ontology parse_file(const std::filesystem::path& path);

/// Canonical document: declarations (Class, ObjectProperty, DataProperty,
/// Individual; each sorted by IRI), then RBox, TBox and ABox statements, each
/// block sorted by line. With `entailed`, inferred axioms follow as
/// `# inferred: <statement>` comment lines, which requires a current closure.
std::string serialize(const Ontology& ontology, bool entailed = false);
void write_file(const Ontology& ontology, const std::filesystem::path& path);

}  // namespace ontodesc
