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

#include "ontodesc/element.hpp"

namespace ontodesc {

namespace {

Restriction make(Connective next, RestrictionForm form, Entity property, Entity filler,
                 std::uint32_t n) {
  return {next, form, std::move(property), std::move(filler), n};
}

std::string_view connective_text(Connective c) {
  switch (c) {
    case Connective::Union: return "OU";
    case Connective::Intersection: return "OI";
    case Connective::None: return "OV";
  }
  return "?";
}

}  // namespace

Restriction Restriction::of_class(Entity cls, Connective next) {
  return make(next, RestrictionForm::Class, {}, std::move(cls), 0);
}
Restriction Restriction::some(Entity property, Entity cls, Connective next) {
  return make(next, RestrictionForm::Some, std::move(property), std::move(cls), 0);
}
Restriction Restriction::all(Entity property, Entity cls, Connective next) {
  return make(next, RestrictionForm::All, std::move(property), std::move(cls), 0);
}
Restriction Restriction::min(std::uint32_t n, Entity property, Entity cls, Connective next) {
  return make(next, RestrictionForm::Min, std::move(property), std::move(cls), n);
}
Restriction Restriction::max(std::uint32_t n, Entity property, Entity cls, Connective next) {
  return make(next, RestrictionForm::Max, std::move(property), std::move(cls), n);
}

std::string render(const Element& element) {
  struct Visitor {
    std::string operator()(const VoidElement&) const { return "void"; }
    std::string operator()(const Entity& e) const { return e.name(); }
    std::string operator()(const Link& l) const {
      return "<" + l.property.name() + " " + l.filler.name() + ">";
    }
    std::string operator()(const Restriction& r) const {
      std::string body;
      switch (r.form) {
        case RestrictionForm::Class: body = "RV " + r.filler.name(); break;
        case RestrictionForm::Some: body = "RS " + r.property.name() + " " + r.filler.name(); break;
        case RestrictionForm::All: body = "RA " + r.property.name() + " " + r.filler.name(); break;
        case RestrictionForm::Min:
          body = "Rm " + std::to_string(r.cardinality) + " " + r.property.name() + " " +
                 r.filler.name();
          break;
        case RestrictionForm::Max:
          body = "RM " + std::to_string(r.cardinality) + " " + r.property.name() + " " +
                 r.filler.name();
          break;
      }
      return "[" + std::string(connective_text(r.next)) + " " + body + "]";
    }
  };
  return std::visit(Visitor{}, element);
}

}  // namespace ontodesc
