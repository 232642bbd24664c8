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
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ontodesc/ontology.hpp"
#include "ontodesc/reasoner.hpp"
#include "reasoner/membership_kernel.hpp"

namespace ontodesc {

namespace {

using detail::Atom;
using detail::Bits;
using detail::BitMatrix;
using detail::CompiledDefinition;
using detail::MembershipProblem;
using Op = ClassExpression::Op;

// Dense numbering of the entities of one kind.
class Index {
 public:
  int add(const Entity& e) {
    auto [it, inserted] = ids_.try_emplace(e, static_cast<int>(entities_.size()));
    if (inserted) entities_.push_back(e);
    return it->second;
  }
  int at(const Entity& e) const { return ids_.at(e); }
  const Entity& operator[](int id) const { return entities_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return entities_.size(); }

 private:
  std::unordered_map<Entity, int, EntityHash> ids_;
  std::vector<Entity> entities_;
};

// Reflexive-transitive reachability over a directed graph.
std::vector<Bits> reachability(std::size_t n, const std::vector<std::vector<int>>& edges) {
  std::vector<Bits> reach(n, Bits(n));
  std::vector<int> stack;
  for (std::size_t start = 0; start < n; ++start) {
    Bits& seen = reach[start];
    seen.set(start);
    stack.assign(1, static_cast<int>(start));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : edges[static_cast<std::size_t>(v)]) {
        if (seen.test(static_cast<std::size_t>(w))) continue;
        seen.set(static_cast<std::size_t>(w));
        stack.push_back(w);
      }
    }
  }
  return reach;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  // The smaller id becomes the root, which keeps roots deterministic.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

struct Fact {
  int subject;
  int property;
  int object;  // individual id, or literal id for data properties
};

class Saturation {
 public:
  Saturation(const Ontology& o, const ReasonerOptions& options) : o_(o), options_(options) {}

  Closure run() {
    number_entities();
    classes_stratum();
    properties_stratum();
    same_as_stratum();
    assertions_stratum();
    memberships_stratum();
    check_consistency();
    return std::move(closure_);
  }

 private:
  void infer(const Axiom& axiom) {
    if (!o_.contains(axiom, View::Asserted)) closure_.inferred.insert(axiom);
  }

  template <class Fn>
  void each(AxiomType type, Fn&& fn) const {
    auto it = o_.asserted().lower_bound(Axiom::lower_bound_key(type, Entity{}));
    for (; it != o_.asserted().end() && it->type() == type; ++it) fn(*it);
  }

  void number_entities() {
    for (const auto& [iri, e] : o_.vocabulary()) {
      switch (e.kind()) {
        case EntityKind::Class: classes_.add(e); break;
        case EntityKind::ObjectProperty:
        case EntityKind::DataProperty: properties_.add(e); break;
        case EntityKind::Individual: individuals_.add(e); break;
        default: break;
      }
    }
    each(AxiomType::PropertyAssertion, [&](const Axiom& a) {
      if (a.third().is_literal()) literals_.add(a.third());
    });
    thing_ = classes_.at(Entity::thing());
    nothing_ = classes_.at(Entity::nothing());
  }

  // Stratum 1.
  void classes_stratum() {
    const std::size_t n = classes_.size();
    std::vector<std::vector<int>> edges(n);
    auto edge = [&](const Entity& a, const Entity& b) {
      edges[static_cast<std::size_t>(classes_.at(a))].push_back(classes_.at(b));
    };
    for (std::size_t c = 0; c < n; ++c) {
      edges[c].push_back(thing_);
      edges[static_cast<std::size_t>(nothing_)].push_back(static_cast<int>(c));
    }
    each(AxiomType::SubClassOf, [&](const Axiom& a) { edge(a.first(), a.second()); });
    each(AxiomType::EquivalentClasses, [&](const Axiom& a) {
      edge(a.first(), a.second());
      edge(a.second(), a.first());
    });
    each(AxiomType::ClassDefinition, [&](const Axiom& a) {
      const ClassExpression& expr = *a.definition();
      if (expr.op() == Op::Named) {
        edge(a.first(), expr.filler());
        edge(expr.filler(), a.first());
      } else if (expr.op() == Op::And) {
        for (const auto& operand : expr.operands())
          if (operand.op() == Op::Named) edge(a.first(), operand.filler());
      }
    });
    supers_ = reachability(n, edges);
    for (std::size_t c = 0; c < n; ++c) {
      supers_[c].for_each([&](std::size_t d) {
        if (d == c) return;
        const Entity& sub = classes_[static_cast<int>(c)];
        const Entity& sup = classes_[static_cast<int>(d)];
        infer(Axiom::sub_class(sub, sup));
        if (supers_[d].test(c) && c < d) infer(Axiom::equivalent_classes(sub, sup));
      });
    }
  }

  // Stratum 2.
  void properties_stratum() {
    const std::size_t n = properties_.size();
    std::vector<std::vector<int>> edges(n);
    auto edge = [&](const Entity& a, const Entity& b) {
      edges[static_cast<std::size_t>(properties_.at(a))].push_back(properties_.at(b));
    };
    each(AxiomType::SubPropertyOf, [&](const Axiom& a) { edge(a.first(), a.second()); });
    each(AxiomType::EquivalentProperties, [&](const Axiom& a) {
      edge(a.first(), a.second());
      edge(a.second(), a.first());
    });
    const auto reach = reachability(n, edges);
    property_supers_.assign(n, {});
    for (std::size_t p = 0; p < n; ++p) {
      reach[p].for_each([&](std::size_t q) {
        if (q == p) return;
        property_supers_[p].push_back(static_cast<int>(q));
        const Entity& sub = properties_[static_cast<int>(p)];
        const Entity& sup = properties_[static_cast<int>(q)];
        infer(Axiom::sub_property(sub, sup));
        if (reach[q].test(p) && p < q) infer(Axiom::equivalent_properties(sub, sup));
      });
    }

    inverses_.assign(n, {});
    each(AxiomType::InverseProperties, [&](const Axiom& a) {
      const int p = properties_.at(a.first());
      const int r = properties_.at(a.second());
      inverses_[static_cast<std::size_t>(p)].push_back(r);
      if (r != p) inverses_[static_cast<std::size_t>(r)].push_back(p);
      infer(Axiom::inverse_properties(a.second(), a.first()));
    });
    for (auto& list : inverses_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    auto flags = [&](AxiomType type) {
      std::vector<char> out(n, 0);
      each(type, [&](const Axiom& a) { out[static_cast<std::size_t>(properties_.at(a.first()))] = 1; });
      return out;
    };
    symmetric_ = flags(AxiomType::SymmetricProperty);
    transitive_ = flags(AxiomType::TransitiveProperty);
    reflexive_ = flags(AxiomType::ReflexiveProperty);
    irreflexive_ = flags(AxiomType::IrreflexiveProperty);
    functional_ = flags(AxiomType::FunctionalProperty);

    chains_by_first_.assign(n, {});
    chains_by_second_.assign(n, {});
    each(AxiomType::SubPropertyChain, [&](const Axiom& a) {
      const Chain chain{properties_.at(a.first()), properties_.at(a.second()),
                        properties_.at(a.third())};
      chains_by_first_[static_cast<std::size_t>(chain.first)].push_back(chain);
      chains_by_second_[static_cast<std::size_t>(chain.second)].push_back(chain);
    });
  }

  // Stratum 3.
  void same_as_stratum() {
    const std::size_t n = individuals_.size();
    DisjointSets sets(n);
    each(AxiomType::SameIndividual, [&](const Axiom& a) {
      sets.unite(individuals_.at(a.first()), individuals_.at(a.second()));
    });
    node_of_.assign(n, 0);
    std::vector<int> node_of_root(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      const auto root = static_cast<std::size_t>(sets.find(static_cast<int>(i)));
      if (node_of_root[root] < 0) {
        node_of_root[root] = static_cast<int>(members_.size());
        members_.emplace_back();
      }
      node_of_[i] = node_of_root[root];
      members_[static_cast<std::size_t>(node_of_[i])].push_back(static_cast<int>(i));
    }
    for (const auto& group : members_) {
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b)
          infer(Axiom::same_individual(individuals_[group[a]], individuals_[group[b]]));
    }
  }

  const std::vector<int>& same_as(int individual) const {
    return members_[static_cast<std::size_t>(node_of_[static_cast<std::size_t>(individual)])];
  }

  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  // Stratum 4: semi-naive closure of property assertions.
  void assertions_stratum() {
    const auto np = static_cast<std::uint64_t>(properties_.size());
    const auto ni = static_cast<std::uint64_t>(individuals_.size());
    std::deque<Fact> queue;

    auto object_key = [&](const Fact& f) {
      return (static_cast<std::uint64_t>(f.subject) * np + static_cast<std::uint64_t>(f.property)) * ni +
             static_cast<std::uint64_t>(f.object);
    };
    auto add = [&](int s, int p, int o, bool derived) {
      if (derived && s == o && irreflexive_[static_cast<std::size_t>(p)]) return;
      const Fact f{s, p, o};
      if (!object_facts_.insert(object_key(f)).second) return;
      out_[pair_key(p, s)].push_back(o);
      in_[pair_key(p, o)].push_back(s);
      facts_.push_back(f);
      queue.push_back(f);
    };

    each(AxiomType::PropertyAssertion, [&](const Axiom& a) {
      const int s = individuals_.at(a.first());
      const int p = properties_.at(a.second());
      if (a.third().is_literal()) {
        data_seeds_.push_back({s, p, literals_.at(a.third())});
      } else {
        add(s, p, individuals_.at(a.third()), false);
      }
    });
    for (std::size_t p = 0; p < properties_.size(); ++p) {
      if (!reflexive_[p]) continue;
      for (std::size_t i = 0; i < individuals_.size(); ++i)
        add(static_cast<int>(i), static_cast<int>(p), static_cast<int>(i), true);
    }

    // Iterates a growing adjacency list by index; the list may reallocate.
    auto each_of = [](std::unordered_map<std::uint64_t, std::vector<int>>& index,
                      std::uint64_t key, auto&& fn) {
      auto it = index.find(key);
      if (it == index.end()) return;
      std::vector<int>* list = &it->second;
      for (std::size_t k = 0; k < list->size(); ++k) fn((*list)[k]);
    };

    while (!queue.empty()) {
      const auto [s, p, o] = queue.front();
      queue.pop_front();
      const auto up = static_cast<std::size_t>(p);
      for (int q : property_supers_[up]) add(s, q, o, true);
      for (int r : inverses_[up]) add(o, r, s, true);
      if (symmetric_[up]) add(o, p, s, true);
      if (transitive_[up]) {
        each_of(out_, pair_key(p, o), [&](int c) { add(s, p, c, true); });
        each_of(in_, pair_key(p, s), [&](int z) { add(z, p, o, true); });
      }
      for (const Chain& chain : chains_by_first_[up])
        each_of(out_, pair_key(chain.second, o), [&](int c) { add(s, chain.super, c, true); });
      for (const Chain& chain : chains_by_second_[up])
        each_of(in_, pair_key(chain.first, s), [&](int z) { add(z, chain.super, o, true); });
      for (int s2 : same_as(s))
        if (s2 != s) add(s2, p, o, true);
      for (int o2 : same_as(o))
        if (o2 != o) add(s, p, o2, true);
    }

    // Data assertions only follow super-properties and sameAs subjects.
    std::set<std::tuple<int, int, int>> data;
    for (const Fact& seed : data_seeds_) {
      for (int s : same_as(seed.subject)) {
        data.emplace(s, seed.property, seed.object);
        for (int q : property_supers_[static_cast<std::size_t>(seed.property)])
          data.emplace(s, q, seed.object);
      }
    }
    for (const auto& [s, p, l] : data) data_facts_.push_back({s, p, l});

    for (const Fact& f : facts_)
      infer(Axiom::property_assertion(individuals_[f.subject], properties_[f.property],
                                      individuals_[f.object]));
    for (const Fact& f : data_facts_)
      infer(Axiom::property_assertion(individuals_[f.subject], properties_[f.property],
                                      literals_[f.object]));
  }

  // Stratum 5.
  void memberships_stratum() {
    MembershipProblem problem;
    problem.class_count = classes_.size();
    problem.property_count = properties_.size();
    problem.node_count = members_.size();
    problem.supers = supers_;
    problem.base.assign(problem.node_count, Bits(problem.class_count));
    problem.fillers.assign(problem.node_count * problem.property_count, {});

    auto node = [&](int individual) {
      return static_cast<std::size_t>(node_of_[static_cast<std::size_t>(individual)]);
    };
    auto type = [&](std::size_t n, int cls) { problem.base[n].set(static_cast<std::size_t>(cls)); };

    std::vector<std::vector<int>> domains(properties_.size());
    std::vector<std::vector<int>> ranges(properties_.size());
    each(AxiomType::PropertyDomain, [&](const Axiom& a) {
      domains[static_cast<std::size_t>(properties_.at(a.first()))].push_back(classes_.at(a.second()));
    });
    each(AxiomType::PropertyRange, [&](const Axiom& a) {
      if (a.second().is_class())
        ranges[static_cast<std::size_t>(properties_.at(a.first()))].push_back(classes_.at(a.second()));
    });

    for (std::size_t n = 0; n < problem.node_count; ++n) type(n, thing_);
    each(AxiomType::ClassAssertion, [&](const Axiom& a) {
      type(node(individuals_.at(a.first())), classes_.at(a.second()));
    });
    for (const Fact& f : facts_) {
      for (int c : domains[static_cast<std::size_t>(f.property)]) type(node(f.subject), c);
      for (int c : ranges[static_cast<std::size_t>(f.property)]) type(node(f.object), c);
      problem.fillers[node(f.subject) * problem.property_count + static_cast<std::size_t>(f.property)]
          .push_back(static_cast<int>(node(f.object)));
    }
    for (const Fact& f : data_facts_)
      for (int c : domains[static_cast<std::size_t>(f.property)]) type(node(f.subject), c);
    for (auto& list : problem.fillers) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (auto& row : problem.base) {
      Bits closed = row;
      row.for_each([&](std::size_t c) { closed |= supers_[c]; });
      row = std::move(closed);
    }

    each(AxiomType::ClassDefinition, [&](const Axiom& a) {
      problem.definitions.push_back(compile(classes_.at(a.first()), *a.definition()));
    });

    memberships_ = detail::settle_memberships(problem, options_.execution);

    for (std::size_t i = 0; i < individuals_.size(); ++i) {
      memberships_[node(static_cast<int>(i))].for_each([&](std::size_t c) {
        infer(Axiom::class_assertion(individuals_[static_cast<int>(i)],
                                     classes_[static_cast<int>(c)]));
      });
    }
  }

  Atom compile_atom(const ClassExpression& e) const {
    Atom atom;
    atom.op = e.op();
    atom.cls = classes_.at(e.filler());
    if (e.op() != Op::Named) atom.property = properties_.at(e.property());
    atom.cardinality = e.cardinality();
    return atom;
  }

  std::vector<Atom> compile_conjunct(const ClassExpression& e) const {
    std::vector<Atom> out;
    if (e.op() == Op::And) {
      for (const auto& operand : e.operands()) out.push_back(compile_atom(operand));
    } else {
      out.push_back(compile_atom(e));
    }
    return out;
  }

  CompiledDefinition compile(int cls, const ClassExpression& e) const {
    CompiledDefinition def;
    def.cls = cls;
    if (e.op() == Op::Or) {
      for (const auto& member : e.operands()) def.conjuncts.push_back(compile_conjunct(member));
    } else {
      def.conjuncts.push_back(compile_conjunct(e));
    }
    return def;
  }

  bool member(int individual, int cls) const {
    return memberships_[static_cast<std::size_t>(node_of_[static_cast<std::size_t>(individual)])]
        .test(static_cast<std::size_t>(cls));
  }

  void violation(std::string rule, std::vector<Axiom> axioms) {
    closure_.violations.push_back({std::move(rule), std::move(axioms)});
  }

  Axiom object_axiom(const Fact& f) const {
    return Axiom::property_assertion(individuals_[f.subject], properties_[f.property],
                                     individuals_[f.object]);
  }
  Axiom data_axiom(const Fact& f) const {
    return Axiom::property_assertion(individuals_[f.subject], properties_[f.property],
                                     literals_[f.object]);
  }

  void check_consistency() {
    const std::size_t ni = individuals_.size();

    each(AxiomType::DisjointClasses, [&](const Axiom& a) {
      const int x = classes_.at(a.first());
      const int y = classes_.at(a.second());
      for (std::size_t i = 0; i < ni; ++i) {
        const int id = static_cast<int>(i);
        if (member(id, x) && member(id, y))
          violation("disjoint-classes", {a, Axiom::class_assertion(individuals_[id], a.first()),
                                         Axiom::class_assertion(individuals_[id], a.second())});
      }
    });

    for (std::size_t i = 0; i < ni; ++i) {
      const int id = static_cast<int>(i);
      if (member(id, nothing_))
        violation("nothing", {Axiom::class_assertion(individuals_[id], Entity::nothing())});
    }

    // Facts grouped by (property, subject), objects sorted.
    std::map<std::pair<int, int>, std::vector<const Fact*>> object_groups;
    std::map<std::pair<int, int>, std::vector<const Fact*>> data_groups;
    for (const Fact& f : facts_) object_groups[{f.property, f.subject}].push_back(&f);
    for (const Fact& f : data_facts_) data_groups[{f.property, f.subject}].push_back(&f);

    each(AxiomType::DisjointProperties, [&](const Axiom& a) {
      const int p = properties_.at(a.first());
      const int r = properties_.at(a.second());
      const bool data = a.first().is_data_property();
      auto& groups = data ? data_groups : object_groups;
      for (const auto& [key, list] : groups) {
        if (key.first != p) continue;
        auto other = groups.find({r, key.second});
        if (other == groups.end()) continue;
        for (const Fact* f : list) {
          for (const Fact* g : other->second) {
            if (f->object != g->object) continue;
            violation("disjoint-properties",
                      {a, data ? data_axiom(*f) : object_axiom(*f),
                       data ? data_axiom(*g) : object_axiom(*g)});
          }
        }
      }
    });

    each(AxiomType::FunctionalProperty, [&](const Axiom& a) {
      const int p = properties_.at(a.first());
      const bool data = a.first().is_data_property();
      const auto& groups = data ? data_groups : object_groups;
      for (const auto& [key, list] : groups) {
        if (key.first != p) continue;
        std::set<int> distinct;
        for (const Fact* f : list)
          distinct.insert(data ? f->object : node_of_[static_cast<std::size_t>(f->object)]);
        if (distinct.size() < 2) continue;
        std::vector<Axiom> axioms{a};
        for (const Fact* f : list) axioms.push_back(data ? data_axiom(*f) : object_axiom(*f));
        std::sort(axioms.begin() + 1, axioms.end());
        violation("functional", std::move(axioms));
      }
    });

    each(AxiomType::DifferentIndividuals, [&](const Axiom& a) {
      const int x = individuals_.at(a.first());
      const int y = individuals_.at(a.second());
      if (node_of_[static_cast<std::size_t>(x)] != node_of_[static_cast<std::size_t>(y)]) return;
      std::vector<Axiom> axioms{a};
      if (x != y) axioms.push_back(Axiom::same_individual(a.first(), a.second()));
      violation("same-different", std::move(axioms));
    });

    each(AxiomType::PropertyAssertion, [&](const Axiom& a) {
      if (a.third().is_literal() || a.first() != a.third()) return;
      if (irreflexive_[static_cast<std::size_t>(properties_.at(a.second()))])
        violation("irreflexive", {Axiom::irreflexive(a.second()), a});
    });

    std::sort(closure_.violations.begin(), closure_.violations.end(),
              [](const Violation& x, const Violation& y) {
                return std::tie(x.rule, x.axioms) < std::tie(y.rule, y.axioms);
              });
    closure_.consistent = closure_.violations.empty();
  }

  struct Chain {
    int super;
    int first;
    int second;
  };

  const Ontology& o_;
  ReasonerOptions options_;
  Closure closure_;

  Index classes_;
  Index properties_;
  Index individuals_;
  Index literals_;
  int thing_ = 0;
  int nothing_ = 0;

  std::vector<Bits> supers_;
  std::vector<std::vector<int>> property_supers_;
  std::vector<std::vector<int>> inverses_;
  std::vector<char> symmetric_, transitive_, reflexive_, irreflexive_, functional_;
  std::vector<std::vector<Chain>> chains_by_first_;
  std::vector<std::vector<Chain>> chains_by_second_;

  std::vector<int> node_of_;
  std::vector<std::vector<int>> members_;

  std::unordered_set<std::uint64_t> object_facts_;
  std::unordered_map<std::uint64_t, std::vector<int>> out_;
  std::unordered_map<std::uint64_t, std::vector<int>> in_;
  std::vector<Fact> facts_;
  std::vector<Fact> data_seeds_;
  std::vector<Fact> data_facts_;

  BitMatrix memberships_;
};

}  // namespace

Closure saturate(const Ontology& ontology, const ReasonerOptions& options) {
  return Saturation(ontology, options).run();
}

Closure reason(Ontology& ontology, const ReasonerOptions& options) {
  ontology.install(saturate(ontology, options));
  return ontology.closure();
}

}  // namespace ontodesc
