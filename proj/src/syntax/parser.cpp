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

#include "metamorph/syntax/parser.hpp"

#include <unordered_set>

#include "metamorph/syntax/token.hpp"

namespace metamorph::syntax {

namespace {

const std::unordered_set<std::string> kMethodModifiers = {
    "public", "protected", "private", "static", "final",
    "abstract", "synchronized", "native", "strictfp",
};

const std::unordered_set<std::string> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

bool is_lvalue(const Expr& e) {
  return e.is<Ident>() || e.is<FieldAccess>() || e.is<ArrayAccess>();
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Method parse_method() {
    Method m;
    // Comments before the signature: the last Javadoc becomes the method's
    // javadoc, everything else is kept as plain leading comments.
    auto& first_comments = tokens_[0].comments_before;
    std::size_t span_start = cur().span.start;
    int span_line = cur().span.line;
    int span_column = cur().span.column;
    if (!first_comments.empty()) {
      span_start = first_comments.front().span.start;
      span_line = first_comments.front().span.line;
      span_column = first_comments.front().span.column;
    }
    for (auto& c : first_comments) {
      if (c.kind == Comment::Kind::Javadoc) {
        if (m.javadoc) {
          m.leading.push_back(Comment{Comment::Kind::Javadoc, *m.javadoc, {}});
        }
        m.javadoc = c.text;
      } else {
        m.leading.push_back(c);
      }
    }
    first_comments.clear();
    m.span.start = span_start;
    m.span.line = span_line;
    m.span.column = span_column;

    // Signature-level comments collect onto the method itself.
    sinks_.push_back(&m.leading);

    if (cur().is(TokenKind::At)) {
      throw UnsupportedSyntax("annotation", cur().span);
    }
    while (cur().kind == TokenKind::Keyword && kMethodModifiers.count(cur().text)) {
      m.modifiers.push_back(consume().text);
      if (cur().is(TokenKind::At)) throw UnsupportedSyntax("annotation", cur().span);
    }
    if (cur().is_op("<")) throw UnsupportedSyntax("generic method declaration", cur().span);

    m.return_type = parse_type();
    m.name = expect_identifier("method name");
    expect(TokenKind::LParen, "'('");
    if (!cur().is(TokenKind::RParen)) {
      while (true) {
        Param p;
        p.span = cur().span;
        if (cur().is_keyword("final")) {
          consume();
          p.is_final = true;
        }
        p.type = parse_type();
        if (cur().is(TokenKind::Dot)) throw UnsupportedSyntax("varargs parameter", cur().span);
        p.name = expect_identifier("parameter name");
        p.span.end = prev_end_;
        for (const auto& q : m.params) {
          if (q.name == p.name) throw DuplicateDeclaration(p.name, p.span);
        }
        m.params.push_back(std::move(p));
        if (cur().is(TokenKind::Comma)) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(TokenKind::RParen, "')'");
    if (cur().is_keyword("throws")) {
      consume();
      while (true) {
        m.throws.push_back(parse_type());
        if (cur().is(TokenKind::Comma)) {
          consume();
          continue;
        }
        break;
      }
    }
    if (cur().is(TokenKind::Semi)) {
      throw UnsupportedSyntax("abstract method without body", cur().span);
    }
    m.body = parse_block();
    m.span.end = prev_end_;
    sinks_.pop_back();

    // Comments after the closing brace stay with the method so reprinting
    // never drops them.
    if (!cur().is(TokenKind::EndOfInput)) {
      throw ParseError("end of input after method", describe(cur()), cur().span.line,
                       cur().span.column);
    }
    for (auto& c : cur().comments_before) m.trailing.push_back(c);
    return m;
  }

 private:
  // --- token plumbing -------------------------------------------------

  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token& consume() {
    Token& t = tokens_[pos_];
    harvest(t);
    prev_end_ = t.span.end;
    prev_line_ = t.span.line;
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  void harvest(Token& t) {
    if (speculating_ == 0 && !t.comments_before.empty()) {
      if (!sinks_.empty()) {
        auto* sink = sinks_.back();
        for (auto& c : t.comments_before) sink->push_back(std::move(c));
        t.comments_before.clear();
      }
    }
  }

  void expect(TokenKind kind, const std::string& what) {
    if (!cur().is(kind)) {
      throw ParseError(what, describe(cur()), cur().span.line, cur().span.column);
    }
    consume();
  }

  void expect_op(const std::string& op) {
    if (!cur().is_op(op)) {
      throw ParseError("'" + op + "'", describe(cur()), cur().span.line, cur().span.column);
    }
    consume();
  }

  std::string expect_identifier(const std::string& what) {
    if (!cur().is(TokenKind::Identifier)) {
      throw ParseError(what, describe(cur()), cur().span.line, cur().span.column);
    }
    return consume().text;
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::EndOfInput) return "end of input";
    return "'" + t.text + "'";
  }

  bool adjacent(std::size_t a, std::size_t b) const {
    return tokens_[a].span.end == tokens_[b].span.start;
  }

  struct Mark {
    std::size_t pos;
    std::size_t prev_end;
    int prev_line;
  };
  Mark mark() const { return Mark{pos_, prev_end_, prev_line_}; }
  void rewind(const Mark& m) {
    pos_ = m.pos;
    prev_end_ = m.prev_end;
    prev_line_ = m.prev_line;
  }

  // Speculative parses suppress comment harvesting; after a committed
  // speculation the skipped range is harvested in order.
  struct SpeculationGuard {
    int& counter;
    explicit SpeculationGuard(int& c) : counter(c) { ++counter; }
    ~SpeculationGuard() { --counter; }
  };

  void harvest_range(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to && i < tokens_.size(); ++i) harvest(tokens_[i]);
  }

  // --- types -----------------------------------------------------------

  bool at_type_start() const {
    return (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text)) ||
           cur().kind == TokenKind::Identifier;
  }

  TypeRef parse_type() {
    TypeRef t;
    t.span = cur().span;
    if (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text)) {
      t.name = consume().text;
    } else if (cur().is(TokenKind::Identifier)) {
      t.name = consume().text;
      while (cur().is(TokenKind::Dot) && peek().is(TokenKind::Identifier)) {
        consume();
        t.name += "." + consume().text;
      }
      if (cur().is_op("<")) {
        consume();
        if (cur().is_op(">")) {
          consume();
          t.diamond = true;
        } else {
          while (true) {
            t.args.push_back(parse_type_argument());
            if (cur().is(TokenKind::Comma)) {
              consume();
              continue;
            }
            break;
          }
          expect_op(">");
        }
      }
    } else {
      throw ParseError("type", describe(cur()), cur().span.line, cur().span.column);
    }
    while (cur().is(TokenKind::LBracket) && peek().is(TokenKind::RBracket)) {
      consume();
      consume();
      ++t.array_dims;
    }
    t.span.end = prev_end_;
    return t;
  }

  TypeRef parse_type_argument() {
    if (cur().is(TokenKind::Question)) {
      TypeRef t;
      t.span = cur().span;
      t.name = "?";
      consume();
      if (cur().is_keyword("extends")) {
        consume();
        t.wildcard = TypeRef::Wildcard::Extends;
        t.args.push_back(parse_type());
      } else if (cur().is_keyword("super")) {
        consume();
        t.wildcard = TypeRef::Wildcard::Super;
        t.args.push_back(parse_type());
      }
      t.span.end = prev_end_;
      return t;
    }
    return parse_type();
  }

  // --- statements -------------------------------------------------------

  StmtPtr parse_block() {
    SourceSpan span = cur().span;
    expect(TokenKind::LBrace, "'{'");
    Block block;
    while (!cur().is(TokenKind::RBrace)) {
      if (cur().is(TokenKind::EndOfInput)) {
        throw ParseError("'}'", "end of input", cur().span.line, cur().span.column);
      }
      block.stmts.push_back(parse_statement());
      attach_trailing(*block.stmts.back());
    }
    // Comments sitting before '}' attach as trailing of the last statement,
    // or bubble to the enclosing statement for an empty block.
    if (!tokens_[pos_].comments_before.empty() && !block.stmts.empty() && speculating_ == 0) {
      auto& cs = tokens_[pos_].comments_before;
      auto& target = block.stmts.back()->trailing;
      for (auto& c : cs) target.push_back(std::move(c));
      cs.clear();
    }
    expect(TokenKind::RBrace, "'}'");
    span.end = prev_end_;
    return make_stmt(span, std::move(block));
  }

  void attach_trailing(Stmt& stmt) {
    if (speculating_ != 0) return;
    auto& next_comments = tokens_[pos_].comments_before;
    if (next_comments.empty()) return;
    std::size_t taken = 0;
    while (taken < next_comments.size() && next_comments[taken].span.line == prev_line_) ++taken;
    for (std::size_t i = 0; i < taken; ++i) stmt.trailing.push_back(std::move(next_comments[i]));
    next_comments.erase(next_comments.begin(), next_comments.begin() + taken);
  }

  StmtPtr parse_statement() {
    std::vector<Comment> leading;
    sinks_.push_back(&leading);
    StmtPtr stmt;
    try {
      stmt = parse_statement_inner();
    } catch (...) {
      sinks_.pop_back();
      throw;
    }
    sinks_.pop_back();
    stmt->leading = std::move(leading);
    return stmt;
  }

  StmtPtr parse_statement_inner() {
    const Token& t = cur();
    SourceSpan span = t.span;
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "if") return parse_if();
      if (t.text == "for") return parse_for();
      if (t.text == "while") {
        consume();
        expect(TokenKind::LParen, "'('");
        auto cond = parse_expression();
        expect(TokenKind::RParen, "')'");
        auto body = parse_body_as_block();
        span.end = prev_end_;
        return make_stmt(span, While{std::move(cond), std::move(body)});
      }
      if (t.text == "do") {
        consume();
        auto body = parse_body_as_block();
        if (!cur().is_keyword("while")) {
          throw ParseError("'while'", describe(cur()), cur().span.line, cur().span.column);
        }
        consume();
        expect(TokenKind::LParen, "'('");
        auto cond = parse_expression();
        expect(TokenKind::RParen, "')'");
        expect(TokenKind::Semi, "';'");
        span.end = prev_end_;
        return make_stmt(span, DoWhile{std::move(body), std::move(cond)});
      }
      if (t.text == "return") {
        consume();
        ExprPtr value;
        if (!cur().is(TokenKind::Semi)) value = parse_expression();
        expect(TokenKind::Semi, "';'");
        span.end = prev_end_;
        return make_stmt(span, Return{std::move(value)});
      }
      if (t.text == "break" || t.text == "continue") {
        bool is_break = t.text == "break";
        consume();
        if (cur().is(TokenKind::Identifier)) {
          throw UnsupportedSyntax("labeled " + std::string(is_break ? "break" : "continue"),
                                  cur().span);
        }
        expect(TokenKind::Semi, "';'");
        span.end = prev_end_;
        if (is_break) return make_stmt(span, BreakStmt{});
        return make_stmt(span, ContinueStmt{});
      }
      if (t.text == "throw") {
        consume();
        auto value = parse_expression();
        expect(TokenKind::Semi, "';'");
        span.end = prev_end_;
        return make_stmt(span, Throw{std::move(value)});
      }
      if (t.text == "try") return parse_try();
      if (t.text == "switch" || t.text == "synchronized" || t.text == "assert" ||
          t.text == "class" || t.text == "interface" || t.text == "enum") {
        throw UnsupportedSyntax(t.text + " statement", t.span);
      }
      if (t.text == "final" || kPrimitiveTypes.count(t.text)) return parse_local_decl();
      if (t.text == "this" || t.text == "super" || t.text == "new") return parse_expr_stmt();
      throw UnsupportedSyntax("'" + t.text + "' statement", t.span);
    }
    if (t.kind == TokenKind::LBrace) return parse_block();
    if (t.kind == TokenKind::Semi) throw UnsupportedSyntax("empty statement", t.span);
    if (t.kind == TokenKind::At) throw UnsupportedSyntax("annotation", t.span);
    if (t.kind == TokenKind::Identifier) {
      // Could be a declaration ("Foo x = ..") or an expression statement.
      Mark m = mark();
      try {
        StmtPtr decl;
        {
          SpeculationGuard guard(speculating_);
          decl = parse_local_decl();
        }
        harvest_range(m.pos, pos_);
        return decl;
      } catch (const ParseError&) {
        rewind(m);
        return parse_expr_stmt();
      }
    }
    return parse_expr_stmt();
  }

  StmtPtr parse_local_decl() {
    SourceSpan span = cur().span;
    LocalDecl decl;
    if (cur().is_keyword("final")) {
      consume();
      decl.is_final = true;
    }
    decl.type = parse_type();
    decl.name = expect_identifier("variable name");
    if (cur().is_op("=")) {
      consume();
      decl.init = parse_expression();
    } else if (!cur().is(TokenKind::Semi)) {
      throw ParseError("'=' or ';'", describe(cur()), cur().span.line, cur().span.column);
    }
    if (cur().is(TokenKind::Comma)) {
      throw UnsupportedSyntax("multiple declarators in one statement", cur().span);
    }
    expect(TokenKind::Semi, "';'");
    span.end = prev_end_;
    return make_stmt(span, std::move(decl));
  }

  StmtPtr parse_expr_stmt() {
    SourceSpan span = cur().span;
    auto e = parse_expression();
    expect(TokenKind::Semi, "';'");
    span.end = prev_end_;
    return make_stmt(span, ExprStmt{std::move(e)});
  }

  StmtPtr parse_body_as_block() {
    if (cur().is(TokenKind::LBrace)) return parse_block();
    SourceSpan span = cur().span;
    Block b;
    b.stmts.push_back(parse_statement());
    span.end = prev_end_;
    return make_stmt(span, std::move(b));
  }

  StmtPtr parse_if() {
    SourceSpan span = cur().span;
    consume();  // if
    expect(TokenKind::LParen, "'('");
    auto cond = parse_expression();
    expect(TokenKind::RParen, "')'");
    auto then_block = parse_body_as_block();
    StmtPtr else_branch;
    if (cur().is_keyword("else")) {
      consume();
      if (cur().is_keyword("if")) {
        else_branch = parse_if();
      } else {
        else_branch = parse_body_as_block();
      }
    }
    span.end = prev_end_;
    return make_stmt(span, If{std::move(cond), std::move(then_block), std::move(else_branch)});
  }

  StmtPtr parse_for() {
    SourceSpan span = cur().span;
    consume();  // for
    expect(TokenKind::LParen, "'('");

    // Enhanced for: "Type name :".
    {
      Mark m = mark();
      bool enhanced = false;
      TypeRef type;
      std::string name;
      {
        SpeculationGuard guard(speculating_);
        try {
          if (at_type_start()) {
            type = parse_type();
            if (cur().is(TokenKind::Identifier)) {
              name = consume().text;
              if (cur().is(TokenKind::Colon)) {
                consume();
                enhanced = true;
              }
            }
          }
        } catch (const ParseError&) {
          enhanced = false;
        }
      }
      if (enhanced) {
        harvest_range(m.pos, pos_);
        auto iterable = parse_expression();
        expect(TokenKind::RParen, "')'");
        auto body = parse_body_as_block();
        span.end = prev_end_;
        return make_stmt(span,
                         EnhancedFor{std::move(type), std::move(name), std::move(iterable),
                                     std::move(body)});
      }
      rewind(m);
    }

    For loop;
    if (!cur().is(TokenKind::Semi)) {
      if (cur().is_keyword("final") ||
          (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text))) {
        loop.init = parse_local_decl();  // consumes the ';'
      } else if (cur().is(TokenKind::Identifier)) {
        Mark m = mark();
        try {
          {
            SpeculationGuard guard(speculating_);
            loop.init = parse_local_decl();
          }
          harvest_range(m.pos, pos_);
        } catch (const ParseError&) {
          rewind(m);
          SourceSpan is = cur().span;
          auto e = parse_expression();
          if (cur().is(TokenKind::Comma)) {
            throw UnsupportedSyntax("multiple for-init expressions", cur().span);
          }
          expect(TokenKind::Semi, "';'");
          is.end = prev_end_;
          loop.init = make_stmt(is, ExprStmt{std::move(e)});
        }
      } else {
        SourceSpan is = cur().span;
        auto e = parse_expression();
        expect(TokenKind::Semi, "';'");
        is.end = prev_end_;
        loop.init = make_stmt(is, ExprStmt{std::move(e)});
      }
    } else {
      consume();  // ';'
    }
    if (!cur().is(TokenKind::Semi)) loop.cond = parse_expression();
    expect(TokenKind::Semi, "';'");
    if (!cur().is(TokenKind::RParen)) {
      loop.update = parse_expression();
      if (cur().is(TokenKind::Comma)) {
        throw UnsupportedSyntax("multiple for-update expressions", cur().span);
      }
    }
    expect(TokenKind::RParen, "')'");
    loop.body = parse_body_as_block();
    span.end = prev_end_;
    return make_stmt(span, std::move(loop));
  }

  StmtPtr parse_try() {
    SourceSpan span = cur().span;
    consume();  // try
    if (cur().is(TokenKind::LParen)) {
      throw UnsupportedSyntax("try-with-resources", cur().span);
    }
    TryStmt t;
    t.try_block = parse_block();
    while (cur().is_keyword("catch")) {
      CatchClause c;
      c.span = cur().span;
      consume();
      expect(TokenKind::LParen, "'('");
      if (cur().is_keyword("final")) consume();
      c.type = parse_type();
      if (cur().is_op("|")) throw UnsupportedSyntax("multi-catch", cur().span);
      c.name = expect_identifier("catch parameter");
      expect(TokenKind::RParen, "')'");
      c.block = parse_block();
      c.span.end = prev_end_;
      t.catches.push_back(std::move(c));
    }
    if (cur().is_keyword("finally")) {
      consume();
      t.finally_block = parse_block();
    }
    if (t.catches.empty() && !t.finally_block) {
      throw ParseError("'catch' or 'finally'", describe(cur()), cur().span.line,
                       cur().span.column);
    }
    span.end = prev_end_;
    return make_stmt(span, std::move(t));
  }

  // --- expressions -------------------------------------------------------

  ExprPtr parse_expression() { return parse_assignment(); }

  ExprPtr parse_assignment() {
    auto lhs = parse_ternary();
    AssignOp op;
    if (cur().is_op("=")) {
      op = AssignOp::Set;
    } else if (cur().is_op("+=")) {
      op = AssignOp::AddSet;
    } else if (cur().is_op("-=")) {
      op = AssignOp::SubSet;
    } else if (cur().is_op("*=")) {
      op = AssignOp::MulSet;
    } else if (cur().is_op("/=")) {
      op = AssignOp::DivSet;
    } else if (cur().is_op("%=")) {
      op = AssignOp::RemSet;
    } else if (cur().is_op("&=") || cur().is_op("|=") || cur().is_op("^=") || cur().is_op("<<=")) {
      throw UnsupportedSyntax("compound assignment '" + cur().text + "'", cur().span);
    } else if (cur().is_op(">") && peek().is_op(">=") && adjacent(pos_, pos_ + 1)) {
      throw UnsupportedSyntax("compound assignment '>>='", cur().span);
    } else {
      return lhs;
    }
    if (!is_lvalue(*lhs)) {
      throw ParseError("assignable expression", "'" + std::string(assign_op_text(op)) + "'",
                       cur().span.line, cur().span.column);
    }
    SourceSpan span = lhs->span;
    consume();
    auto value = parse_assignment();
    span.end = value->span.end;
    return make_expr(span, Assign{op, std::move(lhs), std::move(value)});
  }

  ExprPtr parse_ternary() {
    auto cond = parse_binary(0);
    if (!cur().is(TokenKind::Question)) return cond;
    SourceSpan span = cond->span;
    consume();
    auto then_value = parse_expression();
    if (!cur().is(TokenKind::Colon)) {
      throw ParseError("':'", describe(cur()), cur().span.line, cur().span.column);
    }
    consume();
    auto else_value = parse_ternary();
    span.end = else_value->span.end;
    return make_expr(span,
                     Ternary{std::move(cond), std::move(then_value), std::move(else_value)});
  }

  // Binary precedence levels, loosest first.
  // 0: ||  1: &&  2: |  3: ^  4: &  5: == !=  6: < > <= >= instanceof
  // 7: << >> >>>  8: + -  9: * / %
  static constexpr int kMaxLevel = 9;

  ExprPtr parse_binary(int level) {
    if (level > kMaxLevel) return parse_unary();
    auto lhs = parse_binary(level + 1);
    while (true) {
      BinaryOp op;
      if (level == 6 && cur().is_keyword("instanceof")) {
        consume();
        TypeRef type = parse_type();
        SourceSpan span = lhs->span;
        span.end = prev_end_;
        lhs = make_expr(span, InstanceOf{std::move(lhs), std::move(type)});
        continue;
      }
      if (!match_binary_op(level, op)) return lhs;
      auto rhs = parse_binary(level + 1);
      SourceSpan span = lhs->span;
      span.end = rhs->span.end;
      lhs = make_expr(span, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  bool match_binary_op(int level, BinaryOp& op) {
    const Token& t = cur();
    if (t.kind != TokenKind::Operator) return false;
    switch (level) {
      case 0:
        if (t.text == "||") { op = BinaryOp::OrOr; consume(); return true; }
        return false;
      case 1:
        if (t.text == "&&") { op = BinaryOp::AndAnd; consume(); return true; }
        return false;
      case 2:
        if (t.text == "|") { op = BinaryOp::BitOr; consume(); return true; }
        return false;
      case 3:
        if (t.text == "^") { op = BinaryOp::BitXor; consume(); return true; }
        return false;
      case 4:
        if (t.text == "&") { op = BinaryOp::BitAnd; consume(); return true; }
        return false;
      case 5:
        if (t.text == "==") { op = BinaryOp::Eq; consume(); return true; }
        if (t.text == "!=") { op = BinaryOp::Ne; consume(); return true; }
        return false;
      case 6:
        if (t.text == "<") { op = BinaryOp::Lt; consume(); return true; }
        if (t.text == "<=") { op = BinaryOp::Le; consume(); return true; }
        if (t.text == ">=") { op = BinaryOp::Ge; consume(); return true; }
        if (t.text == ">" && !(peek().is_op(">") && adjacent(pos_, pos_ + 1))) {
          op = BinaryOp::Gt;
          consume();
          return true;
        }
        return false;
      case 7:
        if (t.text == "<<") { op = BinaryOp::Shl; consume(); return true; }
        if (t.text == ">" && peek().is_op(">") && adjacent(pos_, pos_ + 1)) {
          if (peek(2).is_op(">") && adjacent(pos_ + 1, pos_ + 2)) {
            op = BinaryOp::UShr;
            consume();
            consume();
            consume();
          } else {
            op = BinaryOp::Shr;
            consume();
            consume();
          }
          return true;
        }
        return false;
      case 8:
        if (t.text == "+") { op = BinaryOp::Add; consume(); return true; }
        if (t.text == "-") { op = BinaryOp::Sub; consume(); return true; }
        return false;
      case 9:
        if (t.text == "*") { op = BinaryOp::Mul; consume(); return true; }
        if (t.text == "/") { op = BinaryOp::Div; consume(); return true; }
        if (t.text == "%") { op = BinaryOp::Rem; consume(); return true; }
        return false;
      default:
        return false;
    }
  }

  ExprPtr parse_unary() {
    const Token& t = cur();
    SourceSpan span = t.span;
    if (t.is_op("!")) {
      consume();
      auto operand = parse_unary();
      span.end = operand->span.end;
      return make_expr(span, Unary{UnaryOp::Not, std::move(operand)});
    }
    if (t.is_op("~")) {
      consume();
      auto operand = parse_unary();
      span.end = operand->span.end;
      return make_expr(span, Unary{UnaryOp::BitNot, std::move(operand)});
    }
    if (t.is_op("-")) {
      consume();
      auto operand = parse_unary();
      span.end = operand->span.end;
      return make_expr(span, Unary{UnaryOp::Neg, std::move(operand)});
    }
    if (t.is_op("+")) {
      consume();
      auto operand = parse_unary();
      span.end = operand->span.end;
      return make_expr(span, Unary{UnaryOp::Plus, std::move(operand)});
    }
    if (t.is_op("++") || t.is_op("--")) {
      IncDecOp op = t.is_op("++") ? IncDecOp::Inc : IncDecOp::Dec;
      consume();
      auto target = parse_unary();
      if (!is_lvalue(*target)) {
        throw ParseError("assignable operand of prefix " + std::string(op == IncDecOp::Inc ? "++" : "--"),
                         describe(cur()), span.line, span.column);
      }
      span.end = target->span.end;
      return make_expr(span, IncDec{op, true, std::move(target)});
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    auto e = parse_primary();
    while (true) {
      if (cur().is(TokenKind::Dot)) {
        if (peek().is_op("<")) throw UnsupportedSyntax("explicit generic invocation", peek().span);
        consume();
        std::string name = expect_identifier("member name");
        SourceSpan span = e->span;
        if (cur().is(TokenKind::LParen)) {
          auto args = parse_args();
          span.end = prev_end_;
          e = make_expr(span, MethodCall{std::move(e), std::move(name), std::move(args)});
        } else {
          span.end = prev_end_;
          e = make_expr(span, FieldAccess{std::move(e), std::move(name)});
        }
        continue;
      }
      if (cur().is(TokenKind::Colon) && peek().is(TokenKind::Colon)) {
        throw UnsupportedSyntax("method reference", cur().span);
      }
      if (cur().is(TokenKind::LBracket)) {
        consume();
        auto index = parse_expression();
        expect(TokenKind::RBracket, "']'");
        SourceSpan span = e->span;
        span.end = prev_end_;
        e = make_expr(span, ArrayAccess{std::move(e), std::move(index)});
        continue;
      }
      if (cur().is_op("++") || cur().is_op("--")) {
        if (!is_lvalue(*e)) {
          throw ParseError("assignable operand of postfix " + cur().text, describe(cur()),
                           cur().span.line, cur().span.column);
        }
        IncDecOp op = cur().is_op("++") ? IncDecOp::Inc : IncDecOp::Dec;
        SourceSpan span = e->span;
        span.end = cur().span.end;
        consume();
        e = make_expr(span, IncDec{op, false, std::move(e)});
        continue;
      }
      if (cur().is_op("->")) throw UnsupportedSyntax("lambda expression", cur().span);
      return e;
    }
  }

  std::vector<ExprPtr> parse_args() {
    expect(TokenKind::LParen, "'('");
    std::vector<ExprPtr> args;
    if (!cur().is(TokenKind::RParen)) {
      while (true) {
        args.push_back(parse_expression());
        if (cur().is(TokenKind::Comma)) {
          consume();
          continue;
        }
        break;
      }
    }
    expect(TokenKind::RParen, "')'");
    return args;
  }

  ExprPtr parse_primary() {
    const Token& t = cur();
    SourceSpan span = t.span;
    switch (t.kind) {
      case TokenKind::IntLiteral: {
        Literal lit;
        char last = t.text.empty() ? '\0' : t.text.back();
        lit.kind = (last == 'l' || last == 'L') ? Literal::Kind::Long : Literal::Kind::Int;
        lit.text = t.text;
        consume();
        return make_expr(span, std::move(lit));
      }
      case TokenKind::FloatLiteral: {
        Literal lit;
        char last = t.text.empty() ? '\0' : t.text.back();
        lit.kind = (last == 'f' || last == 'F') ? Literal::Kind::Float : Literal::Kind::Double;
        lit.text = t.text;
        consume();
        return make_expr(span, std::move(lit));
      }
      case TokenKind::StringLiteral: {
        Literal lit{Literal::Kind::Str, t.text};
        consume();
        return make_expr(span, std::move(lit));
      }
      case TokenKind::CharLiteral: {
        Literal lit{Literal::Kind::Char, t.text};
        consume();
        return make_expr(span, std::move(lit));
      }
      case TokenKind::LParen:
        return parse_paren_or_cast();
      case TokenKind::Identifier: {
        std::string name = consume().text;
        if (cur().is(TokenKind::LParen)) {
          auto args = parse_args();
          span.end = prev_end_;
          return make_expr(span, MethodCall{nullptr, std::move(name), std::move(args)});
        }
        if (cur().is_op("->")) throw UnsupportedSyntax("lambda expression", cur().span);
        return make_expr(span, Ident{std::move(name)});
      }
      case TokenKind::Keyword: {
        if (t.text == "true" || t.text == "false") {
          Literal lit{Literal::Kind::Bool, t.text};
          consume();
          return make_expr(span, std::move(lit));
        }
        if (t.text == "null") {
          Literal lit{Literal::Kind::Null, t.text};
          consume();
          return make_expr(span, std::move(lit));
        }
        if (t.text == "this" || t.text == "super") {
          std::string name = consume().text;
          if (cur().is(TokenKind::LParen)) {
            throw UnsupportedSyntax(name + " constructor call", span);
          }
          return make_expr(span, Ident{std::move(name)});
        }
        if (t.text == "new") return parse_new();
        throw ParseError("expression", describe(t), t.span.line, t.span.column);
      }
      default:
        throw ParseError("expression", describe(t), t.span.line, t.span.column);
    }
  }

  ExprPtr parse_paren_or_cast() {
    SourceSpan span = cur().span;
    // Primitive casts are unambiguous.
    if (peek().kind == TokenKind::Keyword && kPrimitiveTypes.count(peek().text)) {
      consume();  // (
      TypeRef type = parse_type();
      expect(TokenKind::RParen, "')'");
      auto operand = parse_unary();
      span.end = operand->span.end;
      return make_expr(span, Cast{std::move(type), std::move(operand)});
    }
    // Reference cast vs parenthesized expression: try "(Type)" and peek at
    // what follows; only an operand-start token makes it a cast.
    if (peek().kind == TokenKind::Identifier) {
      Mark m = mark();
      bool cast = false;
      TypeRef type;
      {
        SpeculationGuard guard(speculating_);
        try {
          consume();  // (
          type = parse_type();
          if (cur().is(TokenKind::RParen)) {
            consume();
            cast = starts_cast_operand();
          }
        } catch (const ParseError&) {
          cast = false;
        }
      }
      if (cast) {
        harvest_range(m.pos, pos_);
        auto operand = parse_unary();
        span.end = operand->span.end;
        return make_expr(span, Cast{std::move(type), std::move(operand)});
      }
      rewind(m);
    }
    consume();  // (
    auto inner = parse_expression();
    expect(TokenKind::RParen, "')'");
    span.end = prev_end_;
    return make_expr(span, Paren{std::move(inner)});
  }

  bool starts_cast_operand() const {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::StringLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::LParen:
        return true;
      case TokenKind::Keyword:
        return t.text == "this" || t.text == "super" || t.text == "new" || t.text == "true" ||
               t.text == "false" || t.text == "null";
      case TokenKind::Operator:
        return t.text == "!" || t.text == "~";
      default:
        return false;
    }
  }

  ExprPtr parse_new() {
    SourceSpan span = cur().span;
    consume();  // new
    TypeRef type = parse_type_no_dims();
    if (cur().is(TokenKind::LBracket)) {
      NewArray arr;
      arr.elem_type = std::move(type);
      bool sized = true;
      while (cur().is(TokenKind::LBracket)) {
        consume();
        if (cur().is(TokenKind::RBracket)) {
          consume();
          sized = false;
          ++arr.extra_dims;
        } else {
          if (!sized) {
            throw ParseError("']'", describe(cur()), cur().span.line, cur().span.column);
          }
          arr.dims.push_back(parse_expression());
          expect(TokenKind::RBracket, "']'");
        }
      }
      if (cur().is(TokenKind::LBrace)) {
        throw UnsupportedSyntax("array initializer", cur().span);
      }
      if (arr.dims.empty()) {
        throw UnsupportedSyntax("array creation without dimensions", span);
      }
      span.end = prev_end_;
      return make_expr(span, std::move(arr));
    }
    auto args = parse_args();
    if (cur().is(TokenKind::LBrace)) {
      throw UnsupportedSyntax("anonymous class body", cur().span);
    }
    span.end = prev_end_;
    return make_expr(span, NewObject{std::move(type), std::move(args)});
  }

  TypeRef parse_type_no_dims() {
    // Like parse_type but leaves '[' for the array-creation grammar.
    TypeRef t;
    t.span = cur().span;
    if (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text)) {
      t.name = consume().text;
    } else if (cur().is(TokenKind::Identifier)) {
      t.name = consume().text;
      while (cur().is(TokenKind::Dot) && peek().is(TokenKind::Identifier)) {
        consume();
        t.name += "." + consume().text;
      }
      if (cur().is_op("<")) {
        consume();
        if (cur().is_op(">")) {
          consume();
          t.diamond = true;
        } else {
          while (true) {
            t.args.push_back(parse_type_argument());
            if (cur().is(TokenKind::Comma)) {
              consume();
              continue;
            }
            break;
          }
          expect_op(">");
        }
      }
    } else {
      throw ParseError("type", describe(cur()), cur().span.line, cur().span.column);
    }
    t.span.end = prev_end_;
    return t;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t prev_end_ = 0;
  int prev_line_ = 0;
  int speculating_ = 0;
  std::vector<std::vector<Comment>*> sinks_;
};

}  // namespace

Method parse_method(const std::string& text) { return Parser(text).parse_method(); }

}  // namespace metamorph::syntax
