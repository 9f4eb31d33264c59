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

#ifndef METAMORPH_SYNTAX_PRINTER_HPP
#define METAMORPH_SYNTAX_PRINTER_HPP

#include <string>

#include "metamorph/syntax/ast.hpp"

namespace metamorph::syntax {

/// Canonical formatting: 4-space indents, one statement per line, single
/// spaces around binary operators. Deterministic; parse(print(m)) is
/// structurally equal to m for parser-produced trees.
std::string print(const Method& method);
std::string print(const Stmt& stmt);
std::string print(const Expr& expr);
std::string print(const TypeRef& type);

/// Expression precedence as used by the printer's grouping logic. Higher
/// binds tighter.
int expr_precedence(const Expr& expr);

}  // namespace metamorph::syntax

#endif  // METAMORPH_SYNTAX_PRINTER_HPP
