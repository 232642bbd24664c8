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

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "ontodesc/ontology.hpp"
#include "ontodesc/reasoner.hpp"

namespace ontodesc {

/// Shared, synchronized access to one ontology.
///
/// Copies of a handle refer to the same ontology. Mutations and reasoning
/// take the lock exclusively; inspections share it, so readers can run
/// concurrently between mutations. Sequences of calls are not atomic.
class OntologyHandle {
 public:
  OntologyHandle() : OntologyHandle(Ontology{}) {}
  explicit OntologyHandle(Ontology ontology)
      : state_(std::make_shared<State>(std::move(ontology))) {}

  template <class Fn>
  decltype(auto) inspect(Fn&& fn) const {
    std::shared_lock lock(state_->mutex);
    return std::forward<Fn>(fn)(std::as_const(state_->ontology));
  }

  template <class Fn>
  decltype(auto) modify(Fn&& fn) {
    std::unique_lock lock(state_->mutex);
    return std::forward<Fn>(fn)(state_->ontology);
  }

  /// Saturates the ontology and installs the closure.
  Closure reason(const ReasonerOptions& options = {});

  /// Copy of the current ontology state.
  Ontology snapshot() const;

  bool operator==(const OntologyHandle& other) const noexcept {
    return state_ == other.state_;
  }

 private:
  struct State {
    explicit State(Ontology o) : ontology(std::move(o)) {}
    mutable std::shared_mutex mutex;
    Ontology ontology;
  };
  std::shared_ptr<State> state_;
};

}  // namespace ontodesc
