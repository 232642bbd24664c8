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

#include "parser/lexer.hpp"

#include "ontodesc/error.hpp"

namespace ontodesc::detail {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool ends_word(char c) { return is_space(c) || c == '(' || c == ')' || c == '"' || c == '#'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;

  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    Token token;
    token.line = line;
    token.column = column;
    if (c == '(' || c == ')') {
      token.kind = c == '(' ? TokenKind::Open : TokenKind::Close;
      advance();
    } else if (c == '"') {
      token.kind = TokenKind::String;
      advance();
      for (;;) {
        if (i >= text.size() || text[i] == '\n')
          throw SyntaxError(token.line, token.column, "closing quote");
        if (text[i] == '"') {
          advance();
          break;
        }
        if (text[i] == '\\') {
          advance();
          if (i >= text.size()) throw SyntaxError(line, column, "escape sequence");
          switch (text[i]) {
            case '"': token.text += '"'; break;
            case '\\': token.text += '\\'; break;
            case 'n': token.text += '\n'; break;
            case 't': token.text += '\t'; break;
            default: throw SyntaxError(line, column, "one of \\\" \\\\ \\n \\t");
          }
          advance();
          continue;
        }
        token.text += text[i];
        advance();
      }
    } else {
      token.kind = TokenKind::Word;
      while (i < text.size() && !ends_word(text[i])) {
        token.text += text[i];
        advance();
      }
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

}  // namespace ontodesc::detail
