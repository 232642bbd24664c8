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

#include "support/suites.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "ontodesc/compound.hpp"
#include "ontodesc/error.hpp"
#include "ontodesc/mapping.hpp"
#include "ontodesc/reasoner.hpp"
#include "ontodesc/text_format.hpp"
#include "support/generator.hpp"
#include "support/naive_oracle.hpp"

namespace ontodesc::testing {

std::string SuiteReport::summary() const {
  std::string out = "cases=" + std::to_string(cases) + " checks=" + std::to_string(checks);
  if (!failures.empty()) out += " first failure: " + failures.front();
  return out;
}

std::set<std::string> bfs(const Graph& graph, const std::string& from) {
  std::set<std::string> seen{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    auto it = graph.find(v);
    if (it == graph.end()) continue;
    for (const std::string& w : it->second)
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen;
}

std::set<std::pair<std::string, std::string>> warshall(
    const std::set<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> nodes;
  for (const auto& [a, b] : edges) {
    nodes.push_back(a);
    nodes.push_back(b);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const std::size_t n = nodes.size();
  auto id = [&](const std::string& s) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), s) - nodes.begin());
  };
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : edges) m[id(a)][id(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = 1;
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j]) out.insert({nodes[i], nodes[j]});
  return out;
}

namespace {

std::string describe(const std::set<Axiom>& axioms, std::size_t limit = 4) {
  std::string out;
  std::size_t n = 0;
  for (const Axiom& a : axioms) {
    if (n++ == limit) return out + " ...";
    out += (out.empty() ? "" : " ") + render(a);
  }
  return out.empty() ? "{}" : out;
}

std::set<Axiom> difference(const std::set<Axiom>& a, const std::set<Axiom>& b) {
  std::set<Axiom> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Reflexive axioms hold for every declared entity whether asserted or not.
bool tautology(const Axiom& a) {
  switch (a.type()) {
    case AxiomType::SubClassOf:
    case AxiomType::EquivalentClasses:
    case AxiomType::SubPropertyOf:
    case AxiomType::EquivalentProperties:
    case AxiomType::SameIndividual: return a.first() == a.second();
    default: return false;
  }
}

std::set<Axiom> entailed(const Ontology& o) {
  std::set<Axiom> out = o.asserted();
  out.insert(o.inferred().begin(), o.inferred().end());
  std::erase_if(out, tautology);
  return out;
}

std::string elements_text(const std::vector<Element>& elements) {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? " " : "") + render(elements[i]);
  return out + "]";
}

CompoundDescriptor full_for(OntologyHandle handle, const Entity& e) {
  if (e.is_class()) return full_class(std::move(handle), e);
  if (e.is_property()) return full_property(std::move(handle), e);
  return full_individual(std::move(handle), e);
}

// Whether the compound has a build factory for `tag`.
bool compound_builds(const CompoundDescriptor& c, Expression tag) {
  try {
    c.build(tag);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UndefinedBuild) throw;
    return false;
  }
}

std::vector<Entity> groundable(const Ontology& o) {
  std::vector<Entity> out;
  for (const auto& [iri, e] : o.vocabulary())
    if (e.is_class() || e.is_property() || e.is_individual()) out.push_back(e);
  return out;
}

}  // namespace

SuiteReport mapping_bijection(std::uint64_t seed, std::size_t count) {
  SuiteReport report;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Expression tag = kAllExpressions[i % kAllExpressions.size()];
    const MappingCase c = random_mapping_case(rng, tag);
    ++report.cases;
    const std::string label = std::string(code(tag)) + " " + c.ground.name() + " " +
                              elements_text(c.elements);
    try {
      if (tag == Expression::Definition) {
        const Axiom axiom = to_owl(tag, c.ground, std::span(c.elements));
        const auto back = definition_from_owl(c.ground, axiom);
        ++report.checks;
        if (back != c.elements) report.fail(label + " came back as " + elements_text(back));
        ++report.checks;
        if (to_owl(tag, c.ground, std::span(back)) != axiom)
          report.fail(label + " does not map back to " + render(axiom));
        continue;
      }
      for (const Element& element : c.elements) {
        const Axiom axiom = to_owl(tag, c.ground, element);
        ++report.checks;
        if (!is_about(tag, c.ground, axiom)) report.fail(label + ": axiom not about ground");
        const Element back = from_owl(tag, c.ground, axiom);
        ++report.checks;
        if (back != element) report.fail(label + " came back as " + render(back));
      }
    } catch (const Error& e) {
      report.fail(label + " threw " + std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  return report;
}

CalculusReport descriptor_calculus(std::uint64_t seed, std::size_t count) {
  CalculusReport report;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed + i);
    OntologyHandle handle(random_ontology(rng));
    handle.reason();
    const auto before = handle.inspect([](const Ontology& o) {
      return std::pair{entailed(o), o.closure().consistent};
    });
    const auto entities = handle.inspect(groundable);
    const std::string world = "ontology #" + std::to_string(i);
    for (SuiteReport* r : {&report.read_idempotence, &report.write_idempotence,
                           &report.build_coherence, &report.entailment_stability})
      ++r->cases;

    try {
      for (const Entity& ground : entities) {
        for (Expression tag : kAllExpressions) {
          if (!accepts_ground(tag, ground)) continue;
          const std::string where = world + " " + std::string(code(tag)) + "(" + ground.name() + ")";
          Descriptor d(handle, tag, ground);

          d.read();
          const auto first = d.elements();
          const auto again = d.read();
          ++report.read_idempotence.checks;
          if (!again.empty() || d.elements() != first)
            report.read_idempotence.fail(where + ": second read changed " + elements_text(first) +
                                         " to " + elements_text(d.elements()));

          d.write();
          const auto rewrite = d.write();
          ++report.write_idempotence.checks;
          if (!rewrite.empty())
            report.write_idempotence.fail(where + ": second write produced " +
                                          std::to_string(rewrite.size()) + " intents");

          handle.reason();
          const auto after = handle.inspect([](const Ontology& o) {
            return std::pair{entailed(o), o.closure().consistent};
          });
          ++report.entailment_stability.checks;
          if (after != before)
            report.entailment_stability.fail(
                where + ": lost " + describe(difference(before.first, after.first)) +
                ", gained " + describe(difference(after.first, before.first)));

          const auto reread = d.read();
          ++report.write_idempotence.checks;
          if (!reread.empty())
            report.write_idempotence.fail(where + ": read after write changed " +
                                          elements_text(first) + " to " +
                                          elements_text(d.elements()));
        }

        CompoundDescriptor compound = full_for(handle, ground);
        compound.read();
        auto check_built = [&](const std::vector<CompoundDescriptor>& built,
                               std::vector<Entity> expected, const std::string& how) {
          const std::string where = world + " " + how + "(" + ground.name() + ")";
          std::vector<Entity> grounds;
          for (const auto& b : built) grounds.push_back(b.ground());
          ++report.build_coherence.checks;
          if (grounds != expected) report.build_coherence.fail(where + ": unexpected grounds");
          for (const auto& b : built) {
            CompoundDescriptor fresh = full_for(handle, b.ground());
            fresh.read();
            for (const Descriptor& part : fresh.parts()) {
              ++report.build_coherence.checks;
              if (!b.has(part.tag()) || b.part(part.tag()).elements() != part.elements())
                report.build_coherence.fail(where + " -> " + b.ground().name() + " " +
                                            std::string(code(part.tag())) +
                                            " differs from a fresh read");
            }
          }
        };
        for (const Descriptor& part : compound.parts()) {
          std::vector<Entity> expected;
          try {
            expected = part.build_grounds();
          } catch (const Error& e) {
            if (e.code() != ErrorCode::UndefinedBuild) throw;
            continue;
          }
          const std::string how = "build " + std::string(code(part.tag()));
          check_built(part.build([&](const Entity& g) { return full_for(handle, g); }), expected, how);
          if (compound_builds(compound, part.tag()))
            check_built(compound.build(part.tag()), expected, "compound " + how);
          if (part.tag() == Expression::PropertyValue)
            check_built(compound.build_properties(), part.link_properties(), "build properties");
        }
      }
    } catch (const Error& e) {
      report.build_coherence.fail(world + " threw " + std::string(to_string(e.code())) + ": " +
                                  e.what());
    }
  }
  return report;
}

ReasonerReport reasoner_oracles(std::uint64_t seed, std::size_t count) {
  ReasonerReport report;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed + i);
    Ontology o = random_ontology(rng);
    const std::string world = "ontology #" + std::to_string(i);

    const Closure serial = saturate(o, {Execution::Serial});
    const Closure parallel = saturate(o, {Execution::Parallel});
    const OracleResult expected = naive_closure(o);

    ++report.oracle.cases;
    report.oracle.checks += 2;
    if (serial.inferred != expected.inferred)
      report.oracle.fail(world + ": missing " + describe(difference(expected.inferred, serial.inferred)) +
                         ", extra " + describe(difference(serial.inferred, expected.inferred)));
    if (serial.consistent != expected.consistent)
      report.oracle.fail(world + ": consistency " + std::to_string(serial.consistent) +
                         " but oracle says " + std::to_string(expected.consistent));

    ++report.serial_parallel.cases;
    ++report.serial_parallel.checks;
    if (serial.inferred != parallel.inferred || serial.consistent != parallel.consistent ||
        serial.violations != parallel.violations)
      report.serial_parallel.fail(world + ": serial and parallel closures differ");

    reason(o);

    // Told subsumption edges, walked breadth first.
    Graph graph;
    for (const auto& [iri, e] : o.vocabulary()) {
      if (!e.is_class()) continue;
      graph[iri].insert(std::string(kThingIri));
      graph[std::string(kNothingIri)].insert(iri);
    }
    for (const Axiom& a : o.asserted()) {
      const std::string x = a.first().name();
      const std::string y = a.second().name();
      if (a.type() == AxiomType::SubClassOf) graph[x].insert(y);
      if (a.type() == AxiomType::EquivalentClasses) {
        graph[x].insert(y);
        graph[y].insert(x);
      }
      if (a.type() == AxiomType::ClassDefinition) {
        const ClassExpression& d = *a.definition();
        if (d.op() == ClassExpression::Op::Named) {
          graph[x].insert(d.filler().name());
          graph[d.filler().name()].insert(x);
        } else if (d.op() == ClassExpression::Op::And) {
          for (const auto& operand : d.operands())
            if (operand.op() == ClassExpression::Op::Named) graph[x].insert(operand.filler().name());
        }
      }
    }
    ++report.reachability.cases;
    const auto classes = o.entities(EntityKind::Class);
    for (const Entity& a : classes) {
      const auto reach = bfs(graph, a.name());
      for (const Entity& b : classes) {
        ++report.reachability.checks;
        const bool entails = is_entailed(o, o.closure(), Axiom::sub_class(a, b));
        if (entails != reach.contains(b.name()))
          report.reachability.fail(world + ": SubClassOf(" + a.name() + " " + b.name() +
                                   ") entailed=" + std::to_string(entails));
      }
    }

    // Transitive properties of the random world are closed.
    ++report.transitive.cases;
    for (const Axiom& t : o.axioms_of(AxiomType::TransitiveProperty, View::Asserted)) {
      std::set<std::pair<std::string, std::string>> edges;
      for (const Axiom& a : o.axioms_of(AxiomType::PropertyAssertion, View::Entailed))
        if (a.second() == t.first()) edges.insert({a.first().name(), a.third().name()});
      // Irreflexivity wins over transitivity: derived self-loops are dropped.
      auto expected = warshall(edges);
      if (o.contains(Axiom::irreflexive(t.first())))
        std::erase_if(expected, [&](const auto& e) { return e.first == e.second && !edges.contains(e); });
      ++report.transitive.checks;
      if (expected != edges)
        report.transitive.fail(world + ": " + t.first().name() + " is not transitively closed");
    }

    // A bare transitive relation saturates to exactly its transitive closure.
    Ontology bare;
    const Entity p = bare.declare(EntityKind::ObjectProperty, "linkedTo");
    bare.assert_axiom(Axiom::transitive(p));
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<Entity> nodes;
    for (int k = 0; k < n; ++k) nodes.push_back(bare.declare(EntityKind::Individual, "n" + std::to_string(k)));
    std::set<std::pair<std::string, std::string>> told;
    const int edge_count = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int k = 0; k < edge_count; ++k) {
      const auto& s = nodes[rng() % nodes.size()];
      const auto& t = nodes[rng() % nodes.size()];
      bare.assert_axiom(Axiom::property_assertion(s, p, t));
      told.insert({s.name(), t.name()});
    }
    reason(bare);
    std::set<std::pair<std::string, std::string>> closed;
    for (const Axiom& a : bare.axioms_of(AxiomType::PropertyAssertion, View::Entailed))
      closed.insert({a.first().name(), a.third().name()});
    ++report.transitive.checks;
    if (closed != warshall(told))
      report.transitive.fail(world + ": bare transitive relation of " + std::to_string(told.size()) +
                             " edges closes to " + std::to_string(closed.size()) + " edges, expected " +
                             std::to_string(warshall(told).size()));
  }
  return report;
}

SuiteReport parser_laws(std::uint64_t seed, std::size_t count) {
  SuiteReport report;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed + i);
    const Ontology o = random_ontology(rng);
    const std::string canonical = serialize(o);
    const std::string noisy = noisy_document(o, rng);
    const std::string where = "document #" + std::to_string(i);
    ++report.cases;
    try {
      const Ontology parsed = parse(noisy);
      report.checks += 3;
      if (parsed.asserted() != o.asserted()) report.fail(where + ": axioms differ after parsing");
      if (parsed.vocabulary() != o.vocabulary()) report.fail(where + ": vocabulary differs after parsing");
      if (serialize(parsed) != canonical) report.fail(where + ": noisy document canonicalizes differently");
      ++report.checks;
      if (serialize(parse(canonical)) != canonical) report.fail(where + ": canonical form is not a fixpoint");
    } catch (const Error& e) {
      report.fail(where + " threw " + std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  return report;
}

SuiteReport golden_round_trip(const std::string& path) {
  SuiteReport report;
  std::ifstream in(path, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  ++report.cases;
  ++report.checks;
  try {
    if (!in.is_open()) report.fail("cannot read " + path);
    else if (serialize(parse(bytes.str())) != bytes.str()) report.fail(path + " re-serializes differently");
  } catch (const Error& e) {
    report.fail(path + " threw " + std::string(to_string(e.code())) + ": " + e.what());
  }
  return report;
}

}  // namespace ontodesc::testing
