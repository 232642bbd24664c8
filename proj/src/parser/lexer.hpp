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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ontodesc::detail {

enum class TokenKind { Open, Close, Word, String, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // word text, or the decoded string contents
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits a document into parentheses, words and quoted strings. Words run
/// until whitespace, a parenthesis, a quote or `#`.
std::vector<Token> tokenize(std::string_view text);

}  // namespace ontodesc::detail
