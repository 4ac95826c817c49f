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

#include "lexer.hpp"

#include <cctype>

namespace penplan {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

Lexer::Lexer(std::string_view text, std::string file)
    : text_(text), file_(std::move(file)) {}

const Token& Lexer::peek(size_t ahead) {
  while (buffer_.size() <= ahead) buffer_.push_back(scan());
  return buffer_[ahead];
}

Token Lexer::next() {
  if (buffer_.empty()) return scan();
  Token t = buffer_.front();
  buffer_.pop_front();
  return t;
}

void Lexer::error(const Token& at, const std::string& message) const {
  throw InputError(file_, at.line, at.col, message);
}

Token Lexer::scan() {
  // skip whitespace and % comments
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '%') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      continue;
    }
    if (c == '\n') {
      ++pos_;
      ++line_;
      col_ = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++pos_;
      ++col_;
      continue;
    }
    break;
  }

  Token t;
  t.line = line_;
  t.col = col_;
  if (pos_ >= text_.size()) {
    t.kind = Tok::eof;
    t.text = "<end of input>";
    return t;
  }

  char c = text_[pos_];
  auto take = [&](Tok kind, const char* text, int len) {
    t.kind = kind;
    t.text = text;
    pos_ += len;
    col_ += len;
    return t;
  };

  switch (c) {
    case '{': return take(Tok::lbrace, "{", 1);
    case '}': return take(Tok::rbrace, "}", 1);
    case '(': return take(Tok::lparen, "(", 1);
    case ')': return take(Tok::rparen, ")", 1);
    case ',': return take(Tok::comma, ",", 1);
    case '.': return take(Tok::dot, ".", 1);
    case ':': return take(Tok::colon, ":", 1);
    case '=': return take(Tok::equals, "=", 1);
    case '-': return take(Tok::minus, "-", 1);
    case '!':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        return take(Tok::neq, "!=", 2);
      }
      throw InputError(file_, line_, col_, "unexpected character '!'");
    default:
      break;
  }

  if (std::isdigit(static_cast<unsigned char>(c))) {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++col_;
    }
    t.kind = Tok::integer;
    t.text = std::string(text_.substr(start, pos_ - start));
    t.value = std::stoll(t.text);
    return t;
  }

  if (is_ident_start(c)) {
    size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      ++pos_;
      ++col_;
    }
    t.text = std::string(text_.substr(start, pos_ - start));
    t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::variable : Tok::name;
    return t;
  }

  throw InputError(file_, line_, col_, std::string("unexpected character '") + c + "'");
}

}  // namespace penplan
