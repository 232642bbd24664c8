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

#include "ontodesc/entity.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>

#include "ontodesc/error.hpp"

namespace ontodesc {

namespace {

constexpr std::array<std::string_view, 4> kDatatypes = {
    "xsd:string", "xsd:integer", "xsd:boolean", "xsd:double"};

std::string escape_string(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + 2);
  out.push_back('"');
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::optional<std::string> unescape_string(std::string_view quoted) {
  if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') return std::nullopt;
  std::string out;
  for (std::size_t i = 1; i + 1 < quoted.size(); ++i) {
    char c = quoted[i];
    if (c == '"') return std::nullopt;
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (i + 2 >= quoted.size()) return std::nullopt;
    switch (quoted[++i]) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      default: return std::nullopt;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Individual: return "Individual";
    case EntityKind::Literal: return "Literal";
    case EntityKind::Datatype: return "Datatype";
  }
  return "?";
}

bool is_valid_iri(std::string_view text) {
  if (text.empty()) return false;
  const char first = text.front();
  if (std::isdigit(static_cast<unsigned char>(first)) || first == '+' || first == '-' ||
      first == '.')
    return false;
  if (text == "true" || text == "false" || text.starts_with("xsd:")) return false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
        c == '#')
      return false;
  }
  return true;
}

std::string literal_text(const LiteralValue& value) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return escape_string(s); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(double d) const {
      if (!std::isfinite(d)) throw Error(ErrorCode::InvalidIri, "non-finite double literal");
      std::array<char, 64> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
      std::string out(buf.data(), end);
      if (out.find_first_of(".eE") == std::string::npos) out += ".0";
      return out;
    }
  };
  return std::visit(Visitor{}, value);
}

std::optional<LiteralValue> parse_literal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '"') {
    auto s = unescape_string(text);
    if (!s) return std::nullopt;
    return LiteralValue{std::move(*s)};
  }
  if (text == "true") return LiteralValue{true};
  if (text == "false") return LiteralValue{false};

  const char first = text.front();
  if (!std::isdigit(static_cast<unsigned char>(first)) && first != '-' && first != '+')
    return std::nullopt;
  std::string_view digits = text.front() == '+' ? text.substr(1) : text;
  const char* begin = digits.data();
  const char* end = digits.data() + digits.size();
  if (text.find_first_of(".eE") != std::string_view::npos) {
    double d = 0;
    auto [ptr, ec] = std::from_chars(begin, end, d);
    if (ec != std::errc{} || ptr != end || !std::isfinite(d)) return std::nullopt;
    return LiteralValue{d};
  }
  std::int64_t i = 0;
  auto [ptr, ec] = std::from_chars(begin, end, i);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return LiteralValue{i};
}

Entity Entity::literal(const LiteralValue& value) {
  return {EntityKind::Literal, literal_text(value)};
}

std::optional<Entity> Entity::datatype(std::string_view name) {
  for (auto dt : kDatatypes) {
    if (dt == name) return Entity(EntityKind::Datatype, std::string(dt));
  }
  return std::nullopt;
}

Entity Entity::literal_datatype() const {
  auto value = literal_value();
  if (!value) return {};
  return Entity(EntityKind::Datatype, std::string(kDatatypes[value->index()]));
}

std::optional<LiteralValue> Entity::literal_value() const {
  if (kind_ != EntityKind::Literal) return std::nullopt;
  return parse_literal(name_);
}

std::size_t EntityHash::operator()(const Entity& e) const noexcept {
  return std::hash<std::string>{}(e.name()) * 31 + static_cast<std::size_t>(e.kind());
}

}  // namespace ontodesc
