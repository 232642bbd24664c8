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

#include "reasoner/membership_kernel.hpp"

#include <algorithm>

namespace ontodesc::detail {

namespace {

using Op = ClassExpression::Op;

// `self` is the row being recomputed for `node`; every other node is read
// from `rows`, and Max reads `context`.
bool holds(const MembershipProblem& p, const Atom& atom, std::size_t node, const Bits& self,
           const BitMatrix& rows, const BitMatrix& context) {
  auto member = [&](int filler, const BitMatrix& m) {
    const auto f = static_cast<std::size_t>(filler);
    return f == node && &m == &rows ? self.test(static_cast<std::size_t>(atom.cls))
                                    : m[f].test(static_cast<std::size_t>(atom.cls));
  };
  if (atom.op == Op::Named) return self.test(static_cast<std::size_t>(atom.cls));
  const auto& fillers = p.fillers_of(node, atom.property);
  switch (atom.op) {
    case Op::Some:
      return std::any_of(fillers.begin(), fillers.end(),
                         [&](int f) { return member(f, rows); });
    case Op::Only:
      return std::all_of(fillers.begin(), fillers.end(),
                         [&](int f) { return member(f, rows); });
    case Op::Min:
      return static_cast<std::uint32_t>(std::count_if(
                 fillers.begin(), fillers.end(), [&](int f) { return member(f, rows); })) >=
             atom.cardinality;
    case Op::Max:
      return static_cast<std::uint32_t>(std::count_if(
                 fillers.begin(), fillers.end(), [&](int f) { return member(f, context); })) <=
             atom.cardinality;
    default:
      return false;
  }
}

bool recognizes(const MembershipProblem& p, const CompiledDefinition& def, std::size_t node,
                const Bits& self, const BitMatrix& rows, const BitMatrix& context) {
  return std::any_of(def.conjuncts.begin(), def.conjuncts.end(), [&](const auto& conjunct) {
    return std::all_of(conjunct.begin(), conjunct.end(), [&](const Atom& a) {
      return holds(p, a, node, self, rows, context);
    });
  });
}

// One pass of every definition over a single node; returns whether `row`
// gained a class.
bool refine(const MembershipProblem& p, std::size_t node, Bits& row, const BitMatrix& rows,
            const BitMatrix& context) {
  bool grew = false;
  for (const auto& def : p.definitions) {
    const auto cls = static_cast<std::size_t>(def.cls);
    if (row.test(cls) || !recognizes(p, def, node, row, rows, context)) continue;
    row |= p.supers[cls];
    grew = true;
  }
  return grew;
}

// Reference path: in-place sweeps until nothing changes.
BitMatrix fixpoint_serial(const MembershipProblem& p, const BitMatrix& context, BitMatrix rows) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t node = 0; node < p.node_count; ++node) {
      Bits row = rows[node];
      if (refine(p, node, row, rows, context)) {
        rows[node] = std::move(row);
        changed = true;
      }
    }
  }
  return rows;
}

// Jacobi rounds: every node reads the previous matrix, so rows are computed
// independently.
BitMatrix fixpoint_parallel(const MembershipProblem& p, const BitMatrix& context,
                            BitMatrix rows) {
  BitMatrix next = rows;
  const auto n = static_cast<std::ptrdiff_t>(p.node_count);
  for (bool changed = true; changed;) {
    changed = false;
#pragma omp parallel for schedule(dynamic, 32) reduction(|| : changed)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto node = static_cast<std::size_t>(i);
      Bits row = rows[node];
      if (refine(p, node, row, rows, context)) {
        next[node] = std::move(row);
        changed = true;
      }
    }
    if (changed) rows = next;
  }
  return rows;
}

}  // namespace

bool MembershipProblem::uses_max() const {
  for (const auto& def : definitions)
    for (const auto& conjunct : def.conjuncts)
      for (const auto& atom : conjunct)
        if (atom.op == Op::Max) return true;
  return false;
}

BitMatrix membership_fixpoint(const MembershipProblem& problem, const BitMatrix& context,
                              const BitMatrix& start, Execution execution) {
  return execution == Execution::Serial ? fixpoint_serial(problem, context, start)
                                        : fixpoint_parallel(problem, context, start);
}

BitMatrix settle_memberships(const MembershipProblem& problem, Execution execution) {
  if (!problem.uses_max())
    return membership_fixpoint(problem, problem.base, problem.base, execution);

  // Under-estimate `lower` and over-estimate `upper` converge from both sides.
  // Both fixpoints may start from `lower`, which lies below each of them.
  BitMatrix lower(problem.node_count, Bits(problem.class_count));
  for (;;) {
    BitMatrix start = lower;
    for (std::size_t i = 0; i < problem.node_count; ++i) start[i] |= problem.base[i];
    BitMatrix upper = membership_fixpoint(problem, lower, start, execution);
    BitMatrix next = membership_fixpoint(problem, upper, start, execution);
    if (next == lower) return next;
    lower = std::move(next);
  }
}

}  // namespace ontodesc::detail
