// Copyright 2026 the penplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PENPLAN_LEXER_HPP
#define PENPLAN_LEXER_HPP

#include <deque>
#include <string>
#include <string_view>

#include "diagnostics.hpp"

namespace penplan {

enum class Tok {
  name,     // lowercase identifier: constants, keywords, rule ids
  variable, // uppercase identifier
  integer,
  lbrace,
  rbrace,
  lparen,
  rparen,
  comma,
  dot,
  colon,
  equals,
  neq,      // !=
  minus,
  eof,
};

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  long long value = 0;  // for integer tokens
  int line = 1;
  int col = 1;
};

// Hand-rolled scanner with a small lookahead buffer. `%` starts a comment
// that runs to end of line. Keywords are contextual: they come out as plain
// name tokens and the parser matches them by text.
class Lexer {
 public:
  Lexer(std::string_view text, std::string file);

  const Token& peek(size_t ahead = 0);
  Token next();
  const std::string& file() const { return file_; }

  [[noreturn]] void error(const Token& at, const std::string& message) const;

 private:
  Token scan();

  std::string_view text_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::deque<Token> buffer_;
};

}  // namespace penplan

#endif  // PENPLAN_LEXER_HPP
