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

#include "metamorph/syntax/ast.hpp"

#include <unordered_set>

namespace metamorph::syntax {

bool TypeRef::is_primitive() const {
  static const std::unordered_set<std::string> kPrim = {
      "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};
  return array_dims == 0 && args.empty() && kPrim.count(name) > 0;
}

const char* binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Rem: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::AndAnd: return "&&";
    case BinaryOp::OrOr: return "||";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::UShr: return ">>>";
  }
  return "?";
}

const char* unary_op_text(UnaryOp op) {
  switch (op) {
    case UnaryOp::Not: return "!";
    case UnaryOp::Neg: return "-";
    case UnaryOp::Plus: return "+";
    case UnaryOp::BitNot: return "~";
  }
  return "?";
}

const char* assign_op_text(AssignOp op) {
  switch (op) {
    case AssignOp::Set: return "=";
    case AssignOp::AddSet: return "+=";
    case AssignOp::SubSet: return "-=";
    case AssignOp::MulSet: return "*=";
    case AssignOp::DivSet: return "/=";
    case AssignOp::RemSet: return "%=";
  }
  return "?";
}

ExprPtr make_expr(SourceSpan span, ExprNode node) {
  auto e = std::make_unique<Expr>();
  e->span = span;
  e->node = std::move(node);
  return e;
}

StmtPtr make_stmt(SourceSpan span, StmtNode node) {
  auto s = std::make_unique<Stmt>();
  s->span = span;
  s->node = std::move(node);
  return s;
}

namespace {

ExprPtr clone_opt(const ExprPtr& e) { return e ? clone(*e) : nullptr; }
StmtPtr clone_opt(const StmtPtr& s) { return s ? clone(*s) : nullptr; }

std::vector<ExprPtr> clone_all(const std::vector<ExprPtr>& exprs) {
  std::vector<ExprPtr> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(clone_opt(e));
  return out;
}

}  // namespace

ExprPtr clone(const Expr& expr) {
  ExprNode node = std::visit(
      [](const auto& n) -> ExprNode {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Literal> || std::is_same_v<T, Ident>) {
          return n;
        } else if constexpr (std::is_same_v<T, FieldAccess>) {
          return FieldAccess{clone_opt(n.recv), n.name};
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          return ArrayAccess{clone_opt(n.recv), clone_opt(n.index)};
        } else if constexpr (std::is_same_v<T, MethodCall>) {
          return MethodCall{clone_opt(n.recv), n.name, clone_all(n.args)};
        } else if constexpr (std::is_same_v<T, Binary>) {
          return Binary{n.op, clone_opt(n.lhs), clone_opt(n.rhs)};
        } else if constexpr (std::is_same_v<T, Unary>) {
          return Unary{n.op, clone_opt(n.operand)};
        } else if constexpr (std::is_same_v<T, IncDec>) {
          return IncDec{n.op, n.prefix, clone_opt(n.target)};
        } else if constexpr (std::is_same_v<T, Assign>) {
          return Assign{n.op, clone_opt(n.target), clone_opt(n.value)};
        } else if constexpr (std::is_same_v<T, Ternary>) {
          return Ternary{clone_opt(n.cond), clone_opt(n.then_value), clone_opt(n.else_value)};
        } else if constexpr (std::is_same_v<T, Cast>) {
          return Cast{n.type, clone_opt(n.operand)};
        } else if constexpr (std::is_same_v<T, NewObject>) {
          return NewObject{n.type, clone_all(n.args)};
        } else if constexpr (std::is_same_v<T, NewArray>) {
          return NewArray{n.elem_type, clone_all(n.dims), n.extra_dims};
        } else if constexpr (std::is_same_v<T, InstanceOf>) {
          return InstanceOf{clone_opt(n.operand), n.type};
        } else {
          static_assert(std::is_same_v<T, Paren>);
          return Paren{clone_opt(n.inner)};
        }
      },
      expr.node);
  auto out = make_expr(expr.span, std::move(node));
  return out;
}

StmtPtr clone(const Stmt& stmt) {
  StmtNode node = std::visit(
      [](const auto& n) -> StmtNode {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LocalDecl>) {
          return LocalDecl{n.type, n.name, clone_opt(n.init), n.is_final};
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return ExprStmt{clone_opt(n.expr)};
        } else if constexpr (std::is_same_v<T, If>) {
          return If{clone_opt(n.cond), clone_opt(n.then_block), clone_opt(n.else_branch)};
        } else if constexpr (std::is_same_v<T, For>) {
          return For{clone_opt(n.init), clone_opt(n.cond), clone_opt(n.update), clone_opt(n.body)};
        } else if constexpr (std::is_same_v<T, EnhancedFor>) {
          return EnhancedFor{n.type, n.name, clone_opt(n.iterable), clone_opt(n.body)};
        } else if constexpr (std::is_same_v<T, While>) {
          return While{clone_opt(n.cond), clone_opt(n.body)};
        } else if constexpr (std::is_same_v<T, DoWhile>) {
          return DoWhile{clone_opt(n.body), clone_opt(n.cond)};
        } else if constexpr (std::is_same_v<T, Return>) {
          return Return{clone_opt(n.value)};
        } else if constexpr (std::is_same_v<T, BreakStmt> || std::is_same_v<T, ContinueStmt>) {
          return n;
        } else if constexpr (std::is_same_v<T, Throw>) {
          return Throw{clone_opt(n.value)};
        } else if constexpr (std::is_same_v<T, TryStmt>) {
          TryStmt t;
          t.try_block = clone_opt(n.try_block);
          for (const auto& c : n.catches) {
            t.catches.push_back(CatchClause{c.type, c.name, clone_opt(c.block), c.span});
          }
          t.finally_block = clone_opt(n.finally_block);
          return t;
        } else {
          static_assert(std::is_same_v<T, Block>);
          Block b;
          for (const auto& s : n.stmts) b.stmts.push_back(clone_opt(s));
          return b;
        }
      },
      stmt.node);
  auto out = make_stmt(stmt.span, std::move(node));
  out->leading = stmt.leading;
  out->trailing = stmt.trailing;
  return out;
}

Method clone(const Method& method) {
  Method m;
  m.name = method.name;
  m.modifiers = method.modifiers;
  m.return_type = method.return_type;
  m.params = method.params;
  m.throws = method.throws;
  m.body = method.body ? clone(*method.body) : nullptr;
  m.javadoc = method.javadoc;
  m.leading = method.leading;
  m.trailing = method.trailing;
  m.span = method.span;
  return m;
}

namespace {

bool equal_opt(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool equal_opt(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool equal_all(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal_opt(a[i], b[i])) return false;
  }
  return true;
}

bool equal_comments(const std::vector<Comment>& a, const std::vector<Comment>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind || a[i].text != b[i].text) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const TypeRef& a, const TypeRef& b) {
  if (a.name != b.name || a.wildcard != b.wildcard || a.array_dims != b.array_dims ||
      a.diamond != b.diamond) {
    return false;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(a.args[i], b.args[i])) return false;
  }
  return true;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Literal>) {
          return na.kind == nb.kind && na.text == nb.text;
        } else if constexpr (std::is_same_v<T, Ident>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, FieldAccess>) {
          return na.name == nb.name && equal_opt(na.recv, nb.recv);
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          return equal_opt(na.recv, nb.recv) && equal_opt(na.index, nb.index);
        } else if constexpr (std::is_same_v<T, MethodCall>) {
          return na.name == nb.name && equal_opt(na.recv, nb.recv) && equal_all(na.args, nb.args);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return na.op == nb.op && equal_opt(na.lhs, nb.lhs) && equal_opt(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, Unary>) {
          return na.op == nb.op && equal_opt(na.operand, nb.operand);
        } else if constexpr (std::is_same_v<T, IncDec>) {
          return na.op == nb.op && na.prefix == nb.prefix && equal_opt(na.target, nb.target);
        } else if constexpr (std::is_same_v<T, Assign>) {
          return na.op == nb.op && equal_opt(na.target, nb.target) && equal_opt(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, Ternary>) {
          return equal_opt(na.cond, nb.cond) && equal_opt(na.then_value, nb.then_value) &&
                 equal_opt(na.else_value, nb.else_value);
        } else if constexpr (std::is_same_v<T, Cast>) {
          return structurally_equal(na.type, nb.type) && equal_opt(na.operand, nb.operand);
        } else if constexpr (std::is_same_v<T, NewObject>) {
          return structurally_equal(na.type, nb.type) && equal_all(na.args, nb.args);
        } else if constexpr (std::is_same_v<T, NewArray>) {
          return structurally_equal(na.elem_type, nb.elem_type) && na.extra_dims == nb.extra_dims &&
                 equal_all(na.dims, nb.dims);
        } else if constexpr (std::is_same_v<T, InstanceOf>) {
          return structurally_equal(na.type, nb.type) && equal_opt(na.operand, nb.operand);
        } else {
          static_assert(std::is_same_v<T, Paren>);
          return equal_opt(na.inner, nb.inner);
        }
      },
      a.node);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (!equal_comments(a.leading, b.leading) || !equal_comments(a.trailing, b.trailing)) {
    return false;
  }
  return std::visit(
      [&b](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LocalDecl>) {
          return na.name == nb.name && na.is_final == nb.is_final &&
                 structurally_equal(na.type, nb.type) && equal_opt(na.init, nb.init);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return equal_opt(na.expr, nb.expr);
        } else if constexpr (std::is_same_v<T, If>) {
          return equal_opt(na.cond, nb.cond) && equal_opt(na.then_block, nb.then_block) &&
                 equal_opt(na.else_branch, nb.else_branch);
        } else if constexpr (std::is_same_v<T, For>) {
          return equal_opt(na.init, nb.init) && equal_opt(na.cond, nb.cond) &&
                 equal_opt(na.update, nb.update) && equal_opt(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, EnhancedFor>) {
          return na.name == nb.name && structurally_equal(na.type, nb.type) &&
                 equal_opt(na.iterable, nb.iterable) && equal_opt(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, While>) {
          return equal_opt(na.cond, nb.cond) && equal_opt(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, DoWhile>) {
          return equal_opt(na.body, nb.body) && equal_opt(na.cond, nb.cond);
        } else if constexpr (std::is_same_v<T, Return>) {
          return equal_opt(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, BreakStmt> || std::is_same_v<T, ContinueStmt>) {
          return true;
        } else if constexpr (std::is_same_v<T, Throw>) {
          return equal_opt(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, TryStmt>) {
          if (na.catches.size() != nb.catches.size()) return false;
          for (std::size_t i = 0; i < na.catches.size(); ++i) {
            const auto& ca = na.catches[i];
            const auto& cb = nb.catches[i];
            if (ca.name != cb.name || !structurally_equal(ca.type, cb.type) ||
                !equal_opt(ca.block, cb.block)) {
              return false;
            }
          }
          return equal_opt(na.try_block, nb.try_block) &&
                 equal_opt(na.finally_block, nb.finally_block);
        } else {
          static_assert(std::is_same_v<T, Block>);
          if (na.stmts.size() != nb.stmts.size()) return false;
          for (std::size_t i = 0; i < na.stmts.size(); ++i) {
            if (!equal_opt(na.stmts[i], nb.stmts[i])) return false;
          }
          return true;
        }
      },
      a.node);
}

bool structurally_equal(const Method& a, const Method& b) {
  if (a.name != b.name || a.modifiers != b.modifiers) return false;
  if (!structurally_equal(a.return_type, b.return_type)) return false;
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].name != b.params[i].name || a.params[i].is_final != b.params[i].is_final ||
        !structurally_equal(a.params[i].type, b.params[i].type)) {
      return false;
    }
  }
  if (a.throws.size() != b.throws.size()) return false;
  for (std::size_t i = 0; i < a.throws.size(); ++i) {
    if (!structurally_equal(a.throws[i], b.throws[i])) return false;
  }
  if (a.javadoc != b.javadoc) return false;
  if (!equal_comments(a.leading, b.leading) || !equal_comments(a.trailing, b.trailing)) {
    return false;
  }
  return equal_opt(a.body, b.body);
}

namespace {

template <typename ExprT, typename Fn>
void visit_expr_tree(ExprT& expr, const Fn& fn) {
  fn(expr);
  std::visit(
      [&fn](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FieldAccess>) {
          if (n.recv) visit_expr_tree(*n.recv, fn);
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          if (n.recv) visit_expr_tree(*n.recv, fn);
          if (n.index) visit_expr_tree(*n.index, fn);
        } else if constexpr (std::is_same_v<T, MethodCall>) {
          if (n.recv) visit_expr_tree(*n.recv, fn);
          for (auto& a : n.args) visit_expr_tree(*a, fn);
        } else if constexpr (std::is_same_v<T, Binary>) {
          visit_expr_tree(*n.lhs, fn);
          visit_expr_tree(*n.rhs, fn);
        } else if constexpr (std::is_same_v<T, Unary>) {
          visit_expr_tree(*n.operand, fn);
        } else if constexpr (std::is_same_v<T, IncDec>) {
          visit_expr_tree(*n.target, fn);
        } else if constexpr (std::is_same_v<T, Assign>) {
          visit_expr_tree(*n.target, fn);
          visit_expr_tree(*n.value, fn);
        } else if constexpr (std::is_same_v<T, Ternary>) {
          visit_expr_tree(*n.cond, fn);
          visit_expr_tree(*n.then_value, fn);
          visit_expr_tree(*n.else_value, fn);
        } else if constexpr (std::is_same_v<T, Cast>) {
          visit_expr_tree(*n.operand, fn);
        } else if constexpr (std::is_same_v<T, NewObject>) {
          for (auto& a : n.args) visit_expr_tree(*a, fn);
        } else if constexpr (std::is_same_v<T, NewArray>) {
          for (auto& d : n.dims) visit_expr_tree(*d, fn);
        } else if constexpr (std::is_same_v<T, InstanceOf>) {
          visit_expr_tree(*n.operand, fn);
        } else if constexpr (std::is_same_v<T, Paren>) {
          visit_expr_tree(*n.inner, fn);
        }
      },
      expr.node);
}

template <typename StmtT, typename ExprFn, typename StmtFn>
void visit_stmt_tree(StmtT& stmt, const ExprFn& efn, const StmtFn& sfn) {
  if (sfn) sfn(stmt);
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto expr = [&](auto& e) {
          if (e && efn) visit_expr_tree(*e, efn);
        };
        if constexpr (std::is_same_v<T, LocalDecl>) {
          expr(n.init);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          expr(n.expr);
        } else if constexpr (std::is_same_v<T, If>) {
          expr(n.cond);
          if (n.then_block) visit_stmt_tree(*n.then_block, efn, sfn);
          if (n.else_branch) visit_stmt_tree(*n.else_branch, efn, sfn);
        } else if constexpr (std::is_same_v<T, For>) {
          if (n.init) visit_stmt_tree(*n.init, efn, sfn);
          expr(n.cond);
          expr(n.update);
          if (n.body) visit_stmt_tree(*n.body, efn, sfn);
        } else if constexpr (std::is_same_v<T, EnhancedFor>) {
          expr(n.iterable);
          if (n.body) visit_stmt_tree(*n.body, efn, sfn);
        } else if constexpr (std::is_same_v<T, While>) {
          expr(n.cond);
          if (n.body) visit_stmt_tree(*n.body, efn, sfn);
        } else if constexpr (std::is_same_v<T, DoWhile>) {
          if (n.body) visit_stmt_tree(*n.body, efn, sfn);
          expr(n.cond);
        } else if constexpr (std::is_same_v<T, Return>) {
          expr(n.value);
        } else if constexpr (std::is_same_v<T, Throw>) {
          expr(n.value);
        } else if constexpr (std::is_same_v<T, TryStmt>) {
          if (n.try_block) visit_stmt_tree(*n.try_block, efn, sfn);
          for (auto& c : n.catches) {
            if (c.block) visit_stmt_tree(*c.block, efn, sfn);
          }
          if (n.finally_block) visit_stmt_tree(*n.finally_block, efn, sfn);
        } else if constexpr (std::is_same_v<T, Block>) {
          for (auto& s : n.stmts) {
            if (s) visit_stmt_tree(*s, efn, sfn);
          }
        }
      },
      stmt.node);
}

}  // namespace

void for_each_expr(Stmt& stmt, const std::function<void(Expr&)>& fn) {
  visit_stmt_tree(stmt, fn, std::function<void(Stmt&)>());
}

void for_each_expr(Method& method, const std::function<void(Expr&)>& fn) {
  if (method.body) for_each_expr(*method.body, fn);
}

void for_each_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn) {
  visit_stmt_tree(stmt, fn, std::function<void(const Stmt&)>());
}

void for_each_expr(const Method& method, const std::function<void(const Expr&)>& fn) {
  if (method.body) for_each_expr(*method.body, fn);
}

void for_each_stmt(Stmt& stmt, const std::function<void(Stmt&)>& fn) {
  visit_stmt_tree(stmt, std::function<void(Expr&)>(), fn);
}

void for_each_stmt(Method& method, const std::function<void(Stmt&)>& fn) {
  if (method.body) for_each_stmt(*method.body, fn);
}

void for_each_stmt(const Method& method, const std::function<void(const Stmt&)>& fn) {
  if (method.body) {
    visit_stmt_tree(*method.body, std::function<void(const Expr&)>(), fn);
  }
}

}  // namespace metamorph::syntax
