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

// ontodesc: command-line front end for the robot world scenarios.
//
// Exit codes: 0 success, 1 unreadable or malformed ontology, 2 unknown
// entity, 3 inconsistent ontology, 4 scenario precondition not met.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ontodesc/handle.hpp"
#include "ontodesc/reasoner.hpp"
#include "ontodesc/scenario.hpp"
#include "ontodesc/text_format.hpp"

#ifndef ONTODESC_DEFAULT_ONTOLOGY
#define ONTODESC_DEFAULT_ONTOLOGY "robot_world.onto"
#endif

namespace {

using namespace ontodesc;

enum Exit { kOk = 0, kParse = 1, kUnknown = 2, kInconsistent = 3, kPrecondition = 4 };

class Printer {
 public:
  explicit Printer(bool text) : text_(text) {}
  void heading(const std::string& title) const {
    if (text_) std::cout << title << ":\n";
  }
  void record(const std::string& line) const {
    std::cout << (text_ ? "  " : "") << line << '\n';
  }

 private:
  bool text_;
};

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnknownEntity:
    case ErrorCode::KindClash:
    case ErrorCode::KindMismatch: return kUnknown;
    case ErrorCode::Inconsistent: return kInconsistent;
    case ErrorCode::Precondition: return kPrecondition;
    default: return kParse;
  }
}

int cmd_reason(OntologyHandle& handle, const Printer& out) {
  const Closure closure = handle.reason();
  std::map<std::string, std::size_t> counts;
  for (const Axiom& a : closure.inferred) ++counts[std::string(code(a.type()))];
  out.heading("verdict");
  out.record(closure.consistent ? "consistent" : "inconsistent");
  out.heading("inferred axioms per tag");
  for (const auto& [tag, n] : counts) out.record("inferred " + tag + " " + std::to_string(n));
  if (!closure.violations.empty()) out.heading("violations");
  for (const Violation& v : closure.violations) {
    std::string line = "violation " + v.rule;
    for (const Axiom& a : v.axioms) line += " " + render(a);
    out.record(line);
  }
  return closure.consistent ? kOk : kInconsistent;
}

int cmd_query(OntologyHandle& handle, const Printer& out, const std::string& kind,
              const std::string& iri, const std::string& property, bool most_specific) {
  handle.reason();
  std::vector<Entity> result;
  if (kind == "types") {
    const Entity e = scenario::require(handle, iri, EntityKind::Individual);
    result = handle.inspect(
        [&](const Ontology& o) { return types_of(o, o.closure(), e, most_specific); });
  } else if (kind == "instances") {
    const Entity e = scenario::require(handle, iri, EntityKind::Class);
    result = handle.inspect([&](const Ontology& o) { return instances_of(o, o.closure(), e); });
  } else {
    const Entity e = scenario::require(handle, iri, EntityKind::Individual);
    auto p = handle.inspect([&](const Ontology& o) { return o.lookup(property); });
    if (!p || !p->is_property())
      throw Error(ErrorCode::UnknownEntity, "no property named " + property);
    result = handle.inspect([&](const Ontology& o) { return fillers(o, o.closure(), e, *p); });
  }
  out.heading(kind + " of " + iri);
  for (const Entity& e : result) out.record(e.name());
  return kOk;
}

int cmd_example1(OntologyHandle& handle, const Printer& out, const std::string& location,
                 const std::string& connected, const std::string& door, bool links,
                 const std::string& save) {
  const auto result = scenario::run_example1(handle, location, connected, door);
  out.heading("types of " + location);
  for (const Entity& t : result.types) out.record(t.name());
  if (links) {
    out.heading("links of " + location);
    for (const Link& l : result.links) out.record(l.property.name() + " " + l.filler.name());
  }
  if (!save.empty()) handle.inspect([&](const Ontology& o) { write_file(o, save); });
  return kOk;
}

int cmd_reachable(OntologyHandle& handle, const Printer& out, const std::string& robot) {
  const Entity r = scenario::require(handle, robot, EntityKind::Individual);
  out.heading("reachable from " + robot);
  for (const auto& [location, cls] : scenario::reachable(handle, r))
    out.record(location.name() + " " + cls.name());
  return kOk;
}

int cmd_patrol(OntologyHandle& handle, const Printer& out, const std::string& robot,
               std::size_t steps, std::uint64_t seed) {
  const Entity r = scenario::require(handle, robot, EntityKind::Individual);
  out.heading("patrol of " + robot);
  scenario::patrol(handle, r, steps, seed,
                   [&](const scenario::PatrolStep& s) { out.record(scenario::render(s)); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology descriptors over the robot world"};
  app.require_subcommand(1);

  std::string path = ONTODESC_DEFAULT_ONTOLOGY;
  std::string format = "lines";
  app.add_option("--ontology", path, "Ontology file (.onto)")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"lines", "text"}))
      ->capture_default_str();

  auto* reason = app.add_subcommand("reason", "Reason and report consistency and counts");

  std::string kind, iri, property;
  bool most_specific = false;
  auto* query = app.add_subcommand("query", "List entailed types, instances or fillers");
  query->add_option("kind", kind)->required()->check(CLI::IsMember({"types", "instances", "fillers"}));
  query->add_option("iri", iri)->required();
  query->add_option("--property", property, "Property for fillers");
  query->add_flag("--most-specific", most_specific, "Only most specific types");

  std::string location, connected, door, save;
  bool links = false;
  auto* example1 = app.add_subcommand("example1", "Add a location next to a known one");
  example1->add_option("new", location)->required();
  example1->add_option("connected", connected)->required();
  example1->add_option("door", door)->required();
  example1->add_flag("--links", links, "Also print the new location's links");
  example1->add_option("--save", save, "Write the resulting ontology here");

  std::string robot = "Robot1";
  auto* reachable = app.add_subcommand("reachable", "Leaf classes of connected locations");
  reachable->add_option("robot", robot)->capture_default_str();

  std::size_t steps = 1;
  std::uint64_t seed = 0;
  auto* patrol = app.add_subcommand("patrol", "Random walk through open doors");
  patrol->add_option("--robot", robot)->capture_default_str();
  patrol->add_option("--steps", steps)->check(CLI::PositiveNumber)->capture_default_str();
  patrol->add_option("--seed", seed)->capture_default_str();

  bool entailed = false;
  auto* serialize = app.add_subcommand("serialize", "Print the canonical document");
  serialize->add_flag("--entailed", entailed, "Append inferred axioms as comments");

  CLI11_PARSE(app, argc, argv);
  if (query->parsed() && kind == "fillers" && property.empty()) {
    std::cerr << "query fillers needs --property\n";
    return kParse;
  }

  OntologyHandle handle;
  try {
    handle = OntologyHandle(parse_file(path));
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kParse;
  }

  const Printer out(format == "text");
  try {
    if (reason->parsed()) return cmd_reason(handle, out);
    if (query->parsed()) return cmd_query(handle, out, kind, iri, property, most_specific);
    if (example1->parsed())
      return cmd_example1(handle, out, location, connected, door, links, save);
    if (reachable->parsed()) return cmd_reachable(handle, out, robot);
    if (patrol->parsed()) return cmd_patrol(handle, out, robot, steps, seed);
    if (serialize->parsed()) {
      if (entailed) handle.reason();
      std::cout << handle.inspect([&](const Ontology& o) { return ontodesc::serialize(o, entailed); });
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
