// Copyright 2026 The Metamorph Project Authors
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

#ifndef METAMORPH_SYNTAX_TOKEN_HPP
#define METAMORPH_SYNTAX_TOKEN_HPP

#include <string>
#include <vector>

#include "metamorph/syntax/source.hpp"

namespace metamorph::syntax {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLiteral,     // also long (suffix L)
  FloatLiteral,   // double/float literals
  StringLiteral,  // delimiters + escapes verbatim
  CharLiteral,
  Operator,  // multi-char operators and punctuation like ++ <= >>>=
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Dot,
  Colon,
  Question,
  At,
  EndOfInput,
};

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string text;  // verbatim source text
  SourceSpan span;
  std::vector<Comment> comments_before;  // comments attached to this token

  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, const std::string& t) const { return kind == k && text == t; }
  bool is_keyword(const std::string& kw) const { return kind == TokenKind::Keyword && text == kw; }
  bool is_op(const std::string& op) const { return kind == TokenKind::Operator && text == op; }
};

bool is_reserved_word(const std::string& word);
bool is_valid_identifier(const std::string& word);

/// Tokenizes the whole input. Comments attach to the following token;
/// comments at end of input attach to the EndOfInput token.
std::vector<Token> tokenize(const std::string& text);

}  // namespace metamorph::syntax

#endif  // METAMORPH_SYNTAX_TOKEN_HPP
