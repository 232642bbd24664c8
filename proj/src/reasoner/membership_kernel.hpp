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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ontodesc/class_expression.hpp"
#include "ontodesc/reasoner.hpp"

namespace ontodesc::detail {

/// Fixed-width bit row.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  Bits& operator|=(const Bits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  bool operator==(const Bits&) const = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

using BitMatrix = std::vector<Bits>;

struct Atom {
  ClassExpression::Op op = ClassExpression::Op::Named;
  int cls = 0;       // named class or filler
  int property = 0;
  std::uint32_t cardinality = 0;
};

/// A definition in disjunctive form: the class is recognized when every atom
/// of at least one conjunct holds.
struct CompiledDefinition {
  int cls = 0;
  std::vector<std::vector<Atom>> conjuncts;
};

/// Membership stratum over sameAs representatives ("nodes").
struct MembershipProblem {
  std::size_t class_count = 0;
  std::size_t property_count = 0;
  std::size_t node_count = 0;
  /// Reflexive-transitive superclasses of every class.
  std::vector<Bits> supers;
  /// Memberships that hold before recognition, already closed upwards.
  BitMatrix base;
  std::vector<CompiledDefinition> definitions;
  /// Object fillers, indexed node * property_count + property; sorted, unique.
  std::vector<std::vector<int>> fillers;

  const std::vector<int>& fillers_of(std::size_t node, int property) const {
    return fillers[node * property_count + static_cast<std::size_t>(property)];
  }
  bool uses_max() const;
};

/// Least fixpoint of recognition starting from `start` (which must lie below
/// the fixpoint). Max restrictions count fillers against `context`, every
/// other atom reads the memberships being computed.
BitMatrix membership_fixpoint(const MembershipProblem& problem, const BitMatrix& context,
                              const BitMatrix& start, Execution execution);

/// Alternating fixpoint; returns the memberships that hold in every round.
BitMatrix settle_memberships(const MembershipProblem& problem, Execution execution);

}  // namespace ontodesc::detail
