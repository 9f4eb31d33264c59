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

#ifndef METAMORPH_SYNTAX_SOURCE_HPP
#define METAMORPH_SYNTAX_SOURCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metamorph::syntax {

/// Half-open byte range [start, end) plus the 1-based line/column of start.
/// Synthesized nodes use the default span (all zeros).
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;

  bool contains(const SourceSpan& other) const {
    return start <= other.start && other.end <= end;
  }
  bool synthesized() const { return line == 0; }
};

struct Comment {
  enum class Kind { Line, Block, Javadoc };
  Kind kind = Kind::Line;
  std::string text;  // verbatim, delimiters included
  SourceSpan span;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string code, const std::string& message, int line, int column)
      : std::runtime_error(message), code_(std::move(code)), line_(line), column_(column) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

  /// "file:line:col: message" as required for CLI diagnostics.
  std::string render(const std::string& file) const {
    return file + ":" + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what();
  }

 private:
  std::string code_;
  int line_;
  int column_;
};

class LexError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
 public:
  ParseError(const std::string& expected, const std::string& found, int line, int column)
      : SyntaxError("ParseError", "expected " + expected + ", found " + found, line, column),
        expected_(expected) {}

  const std::string& expected() const { return expected_; }

 private:
  std::string expected_;
};

class UnsupportedSyntax : public SyntaxError {
 public:
  UnsupportedSyntax(std::string construct, SourceSpan span)
      : SyntaxError("UnsupportedSyntax", "unsupported construct: " + construct, span.line,
                    span.column),
        construct_(std::move(construct)),
        span_(span) {}

  const std::string& construct() const { return construct_; }
  const SourceSpan& span() const { return span_; }

 private:
  std::string construct_;
  SourceSpan span_;
};

class DuplicateDeclaration : public SyntaxError {
 public:
  DuplicateDeclaration(std::string name, SourceSpan span)
      : SyntaxError("DuplicateDeclaration", "duplicate declaration of '" + name + "'", span.line,
                    span.column),
        name_(std::move(name)),
        span_(span) {}

  const std::string& name() const { return name_; }
  const SourceSpan& span() const { return span_; }

 private:
  std::string name_;
  SourceSpan span_;
};

}  // namespace metamorph::syntax

#endif  // METAMORPH_SYNTAX_SOURCE_HPP
