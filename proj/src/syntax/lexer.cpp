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

#include "metamorph/syntax/token.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace metamorph::syntax {

namespace {

const std::unordered_set<std::string>& reserved_words() {
  static const std::unordered_set<std::string> kWords = {
      "abstract", "assert",       "boolean", "break",    "byte",      "case",    "catch",
      "char",     "class",        "const",   "continue", "default",   "do",      "double",
      "else",     "enum",         "extends", "final",    "finally",   "float",   "for",
      "goto",     "if",           "implements", "import", "instanceof", "int",   "interface",
      "long",     "native",       "new",     "package",  "private",   "protected", "public",
      "return",   "short",        "static",  "strictfp", "super",     "switch",  "synchronized",
      "this",     "throw",        "throws",  "transient", "try",      "void",    "volatile",
      "while",    "true",         "false",   "null",
  };
  return kWords;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool hex_digit(char c) {
  return digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    std::vector<Comment> pending;
    while (true) {
      skip_whitespace();
      if (at_comment()) {
        pending.push_back(read_comment());
        continue;
      }
      if (eof()) {
        Token end;
        end.kind = TokenKind::EndOfInput;
        end.span = here(0);
        end.comments_before = std::move(pending);
        tokens.push_back(std::move(end));
        return tokens;
      }
      Token tok = next_token();
      tok.comments_before = std::move(pending);
      pending.clear();
      tokens.push_back(std::move(tok));
    }
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan here(std::size_t len) const {
    return SourceSpan{pos_, pos_ + len, line_, col_};
  }

  void skip_whitespace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_comment() const {
    return peek() == '/' && (peek(1) == '/' || peek(1) == '*');
  }

  Comment read_comment() {
    Comment c;
    c.span.start = pos_;
    c.span.line = line_;
    c.span.column = col_;
    if (peek(1) == '/') {
      while (!eof() && peek() != '\n') advance();
      c.kind = Comment::Kind::Line;
    } else {
      int start_line = line_;
      int start_col = col_;
      bool javadoc = peek(2) == '*' && peek(3) != '/';
      advance();  // '/'
      advance();  // '*'
      bool closed = false;
      while (!eof()) {
        if (peek() == '*' && peek(1) == '/') {
          advance();
          advance();
          closed = true;
          break;
        }
        advance();
      }
      if (!closed) {
        throw LexError("UnterminatedComment", "unterminated block comment", start_line, start_col);
      }
      c.kind = javadoc ? Comment::Kind::Javadoc : Comment::Kind::Block;
    }
    c.span.end = pos_;
    c.text = text_.substr(c.span.start, c.span.end - c.span.start);
    return c;
  }

  Token make(TokenKind kind, std::size_t start, int start_line, int start_col) {
    Token t;
    t.kind = kind;
    t.span = SourceSpan{start, pos_, start_line, start_col};
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  Token next_token() {
    std::size_t start = pos_;
    int start_line = line_;
    int start_col = col_;
    char c = peek();

    if (ident_start(c)) {
      while (!eof() && ident_part(peek())) advance();
      Token t = make(TokenKind::Identifier, start, start_line, start_col);
      if (reserved_words().count(t.text)) t.kind = TokenKind::Keyword;
      return t;
    }

    if (digit(c) || (c == '.' && digit(peek(1)))) return read_number(start, start_line, start_col);

    if (c == '"') return read_string(start, start_line, start_col);
    if (c == '\'') return read_char(start, start_line, start_col);

    switch (c) {
      case '(': advance(); return make(TokenKind::LParen, start, start_line, start_col);
      case ')': advance(); return make(TokenKind::RParen, start, start_line, start_col);
      case '{': advance(); return make(TokenKind::LBrace, start, start_line, start_col);
      case '}': advance(); return make(TokenKind::RBrace, start, start_line, start_col);
      case '[': advance(); return make(TokenKind::LBracket, start, start_line, start_col);
      case ']': advance(); return make(TokenKind::RBracket, start, start_line, start_col);
      case ';': advance(); return make(TokenKind::Semi, start, start_line, start_col);
      case ',': advance(); return make(TokenKind::Comma, start, start_line, start_col);
      case '.': advance(); return make(TokenKind::Dot, start, start_line, start_col);
      case ':': advance(); return make(TokenKind::Colon, start, start_line, start_col);
      case '?': advance(); return make(TokenKind::Question, start, start_line, start_col);
      case '@': advance(); return make(TokenKind::At, start, start_line, start_col);
      default: break;
    }

    // Operators, longest match first. '>' is always a single token so the
    // parser can close nested generics; adjacent '>'s merge back into shifts.
    static const std::array<const char*, 28> kOps = {
        "<<=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "->", "+=", "-=", "*=", "/=",
        "%=",  "&=", "|=", "^=", "<<", "+",  "-",  "*",  "/",  "%",  "=",  "<",  ">",  "!",
    };
    for (const char* op : kOps) {
      std::size_t len = std::string::traits_type::length(op);
      if (text_.compare(pos_, len, op) == 0) {
        for (std::size_t i = 0; i < len; ++i) advance();
        return make(TokenKind::Operator, start, start_line, start_col);
      }
    }
    if (c == '&' || c == '|' || c == '^' || c == '~') {
      advance();
      return make(TokenKind::Operator, start, start_line, start_col);
    }

    throw LexError("IllegalCharacter",
                   std::string("illegal character '") + c + "'", start_line, start_col);
  }

  Token read_number(std::size_t start, int start_line, int start_col) {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance();
      advance();
      while (!eof() && (hex_digit(peek()) || peek() == '_')) advance();
    } else {
      while (!eof() && (digit(peek()) || peek() == '_')) advance();
      if (peek() == '.' && digit(peek(1))) {
        is_float = true;
        advance();
        while (!eof() && (digit(peek()) || peek() == '_')) advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        char sign = peek(1);
        if (digit(sign) || ((sign == '+' || sign == '-') && digit(peek(2)))) {
          is_float = true;
          advance();
          if (peek() == '+' || peek() == '-') advance();
          while (!eof() && digit(peek())) advance();
        }
      }
    }
    if (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D') {
      is_float = true;
      advance();
    } else if (peek() == 'l' || peek() == 'L') {
      advance();
    }
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, start_line,
                start_col);
  }

  Token read_string(std::size_t start, int start_line, int start_col) {
    advance();  // opening quote
    while (!eof() && peek() != '"') {
      if (peek() == '\n') {
        throw LexError("UnterminatedLiteral", "unterminated string literal", start_line, start_col);
      }
      if (peek() == '\\') {
        advance();
        if (eof()) break;
      }
      advance();
    }
    if (eof()) {
      throw LexError("UnterminatedLiteral", "unterminated string literal", start_line, start_col);
    }
    advance();  // closing quote
    return make(TokenKind::StringLiteral, start, start_line, start_col);
  }

  Token read_char(std::size_t start, int start_line, int start_col) {
    advance();  // opening quote
    while (!eof() && peek() != '\'') {
      if (peek() == '\n') {
        throw LexError("UnterminatedLiteral", "unterminated char literal", start_line, start_col);
      }
      if (peek() == '\\') {
        advance();
        if (eof()) break;
      }
      advance();
    }
    if (eof()) {
      throw LexError("UnterminatedLiteral", "unterminated char literal", start_line, start_col);
    }
    advance();  // closing quote
    return make(TokenKind::CharLiteral, start, start_line, start_col);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_reserved_word(const std::string& word) { return reserved_words().count(word) > 0; }

bool is_valid_identifier(const std::string& word) {
  if (word.empty() || is_reserved_word(word)) return false;
  if (!ident_start(word[0])) return false;
  for (char c : word) {
    if (!ident_part(c)) return false;
  }
  return true;
}

std::vector<Token> tokenize(const std::string& text) { return Lexer(text).run(); }

}  // namespace metamorph::syntax
