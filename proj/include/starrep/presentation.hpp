#pragma once

#include "starrep/system.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starrep {

/// Input error with a 1-based source position (line 0 when not tied to a file).
struct ParseError : std::runtime_error {
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::string message;
  std::size_t line;
  std::size_t column;
};

using Bindings = std::map<std::string, Scalar>;

struct Parameter {
  std::string name;
  std::optional<Scalar> value;
  std::size_t line = 0;
  friend bool operator==(const Parameter& a, const Parameter& b) {
    return a.name == b.name && a.value == b.value;
  }
};

struct RelationSource {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 1;
  friend bool operator==(const RelationSource& a, const RelationSource& b) { return a.text == b.text; }
};

/// A parsed presentation file. Relations are kept as source text so that
/// parameters can be rebound; they are validated against the declared
/// symbols at parse time.
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  /// Greatest first; empty means the default x_1* > .. > x_n* > x_1 > .. > x_n.
  std::vector<Symbol> order;
  std::vector<Parameter> parameters;
  std::vector<RelationSource> relations;
  /// Work with the closed *-double completion(S) ∪ completion(S)*.
  bool star_double = false;

  Alphabet alphabet() const;
  /// Parameter values after applying `overrides`. Unknown override names are
  /// rejected.
  Bindings bindings(const Bindings& overrides = {}) const;
  /// Throws ParseError for a parameter left unbound.
  std::vector<Polynomial> relation_polynomials(const Bindings& overrides = {}) const;
  RewriteSystem system(const Bindings& overrides = {}) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Line-oriented DSL, see README for the grammar.
Presentation parse_presentation(std::string_view text);
/// Inverse of parse_presentation up to comments and whitespace.
std::string serialize(const Presentation& p);

/// Parses a polynomial expression. `column_offset` shifts reported columns.
Polynomial parse_expression(std::string_view text, const Alphabet& alphabet,
                            const Bindings& bindings, std::size_t line = 0,
                            std::size_t column_offset = 0);
/// A constant expression such as "1/2", "-3", "(1/2+2i)".
Scalar parse_scalar(std::string_view text, std::size_t line = 0, std::size_t column_offset = 0);

} // namespace starrep
