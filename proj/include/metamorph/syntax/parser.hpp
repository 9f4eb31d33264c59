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

#ifndef METAMORPH_SYNTAX_PARSER_HPP
#define METAMORPH_SYNTAX_PARSER_HPP

#include <string>

#include "metamorph/syntax/ast.hpp"

namespace metamorph::syntax {

/// Parses a single method declaration, optionally preceded by a Javadoc
/// block. Throws ParseError, UnsupportedSyntax, or LexError.
Method parse_method(const std::string& text);

}  // namespace metamorph::syntax

#endif  // METAMORPH_SYNTAX_PARSER_HPP
