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

#ifndef METAMORPH_SYNTAX_AST_HPP
#define METAMORPH_SYNTAX_AST_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metamorph/syntax/source.hpp"

namespace metamorph::syntax {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

/// Type reference: primitive name, (qualified) class name, or "?" wildcard.
/// Generic arguments are carried recursively; array types add dimensions.
struct TypeRef {
  enum class Wildcard { None, Extends, Super };

  std::string name;           // "int", "List", "java.util.Map", "?"
  std::vector<TypeRef> args;  // generic arguments; wildcard bound when name == "?"
  Wildcard wildcard = Wildcard::None;
  bool diamond = false;  // new ArrayList<>() — empty arg list spelled "<>"
  int array_dims = 0;
  SourceSpan span;

  bool is_primitive() const;
};

enum class BinaryOp {
  Add, Sub, Mul, Div, Rem,
  Eq, Ne, Lt, Le, Gt, Ge,
  AndAnd, OrOr,
  BitAnd, BitOr, BitXor,
  Shl, Shr, UShr,
};

enum class UnaryOp { Not, Neg, Plus, BitNot };
enum class AssignOp { Set, AddSet, SubSet, MulSet, DivSet, RemSet };
enum class IncDecOp { Inc, Dec };

const char* binary_op_text(BinaryOp op);
const char* unary_op_text(UnaryOp op);
const char* assign_op_text(AssignOp op);

struct Literal {
  enum class Kind { Int, Long, Double, Float, Bool, Str, Char, Null };
  Kind kind = Kind::Int;
  std::string text;  // lexical form, preserved verbatim
};

struct Ident {
  std::string name;
};

struct FieldAccess {
  ExprPtr recv;
  std::string name;
};

struct ArrayAccess {
  ExprPtr recv;
  ExprPtr index;
};

struct MethodCall {
  ExprPtr recv;  // null for bare calls
  std::string name;
  std::vector<ExprPtr> args;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct IncDec {
  IncDecOp op;
  bool prefix = false;
  ExprPtr target;  // lvalue: Ident, FieldAccess, ArrayAccess
};

struct Assign {
  AssignOp op;
  ExprPtr target;  // lvalue
  ExprPtr value;
};

struct Ternary {
  ExprPtr cond;
  ExprPtr then_value;
  ExprPtr else_value;
};

struct Cast {
  TypeRef type;
  ExprPtr operand;
};

struct NewObject {
  TypeRef type;
  std::vector<ExprPtr> args;
};

struct NewArray {
  TypeRef elem_type;
  std::vector<ExprPtr> dims;  // sized dimensions, e.g. new int[3][4]
  int extra_dims = 0;         // trailing empty dims, e.g. new int[3][]
};

struct InstanceOf {
  ExprPtr operand;
  TypeRef type;
};

struct Paren {
  ExprPtr inner;
};

using ExprNode = std::variant<Literal, Ident, FieldAccess, ArrayAccess, MethodCall, Binary, Unary,
                              IncDec, Assign, Ternary, Cast, NewObject, NewArray, InstanceOf, Paren>;

struct Expr {
  SourceSpan span;
  ExprNode node;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  T& as() {
    return std::get<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
};

struct LocalDecl {
  TypeRef type;
  std::string name;
  ExprPtr init;  // optional
  bool is_final = false;
};

struct ExprStmt {
  ExprPtr expr;
};

struct If {
  ExprPtr cond;
  StmtPtr then_block;   // always a Block
  StmtPtr else_branch;  // null, Block, or If (else-if chain)
};

struct For {
  StmtPtr init;    // optional; LocalDecl or ExprStmt
  ExprPtr cond;    // optional
  ExprPtr update;  // optional
  StmtPtr body;    // Block
};

struct EnhancedFor {
  TypeRef type;
  std::string name;
  ExprPtr iterable;
  StmtPtr body;  // Block
};

struct While {
  ExprPtr cond;
  StmtPtr body;  // Block
};

struct DoWhile {
  StmtPtr body;  // Block
  ExprPtr cond;
};

struct Return {
  ExprPtr value;  // optional
};

struct BreakStmt {};
struct ContinueStmt {};

struct Throw {
  ExprPtr value;
};

struct CatchClause {
  TypeRef type;
  std::string name;
  StmtPtr block;  // Block
  SourceSpan span;
};

struct TryStmt {
  StmtPtr try_block;  // Block
  std::vector<CatchClause> catches;
  StmtPtr finally_block;  // optional Block
};

struct Block {
  std::vector<StmtPtr> stmts;
};

using StmtNode = std::variant<LocalDecl, ExprStmt, If, For, EnhancedFor, While, DoWhile, Return,
                              BreakStmt, ContinueStmt, Throw, TryStmt, Block>;

struct Stmt {
  SourceSpan span;
  std::vector<Comment> leading;
  std::vector<Comment> trailing;  // same-line comments after the statement
  StmtNode node;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <typename T>
  T& as() {
    return std::get<T>(node);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node);
  }
};

struct Param {
  TypeRef type;
  std::string name;
  SourceSpan span;
  bool is_final = false;
};

struct Method {
  std::string name;
  std::vector<std::string> modifiers;
  TypeRef return_type;
  std::vector<Param> params;
  std::vector<TypeRef> throws;
  StmtPtr body;  // Block
  std::optional<std::string> javadoc;  // verbatim, including delimiters
  std::vector<Comment> leading;        // non-javadoc comments before the signature
  std::vector<Comment> trailing;       // comments after the closing brace
  SourceSpan span;
};

ExprPtr make_expr(SourceSpan span, ExprNode node);
StmtPtr make_stmt(SourceSpan span, StmtNode node);

ExprPtr clone(const Expr& expr);
StmtPtr clone(const Stmt& stmt);
Method clone(const Method& method);

/// Structural equality: ignores spans, compares comments by kind and text,
/// literals by lexical form.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Method& a, const Method& b);
bool structurally_equal(const TypeRef& a, const TypeRef& b);

/// Visits every expression in evaluation-irrelevant pre-order, including
/// nested statements. The callback may mutate the visited expression.
void for_each_expr(Stmt& stmt, const std::function<void(Expr&)>& fn);
void for_each_expr(Method& method, const std::function<void(Expr&)>& fn);
void for_each_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn);
void for_each_expr(const Method& method, const std::function<void(const Expr&)>& fn);

void for_each_stmt(Stmt& stmt, const std::function<void(Stmt&)>& fn);
void for_each_stmt(Method& method, const std::function<void(Stmt&)>& fn);
void for_each_stmt(const Method& method, const std::function<void(const Stmt&)>& fn);

}  // namespace metamorph::syntax

#endif  // METAMORPH_SYNTAX_AST_HPP
