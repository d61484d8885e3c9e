#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "monideal/betti.hpp"
#include "monideal/ideal.hpp"
#include "monideal/splitting.hpp"

namespace monideal {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}
  ParseError(const std::string& message, size_t position, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        message_(message),
        position_(position),
        line_(line),
        column_(column) {}
  const std::string& message() const { return message_; }
  size_t position() const { return position_; }
  int line() const { return line_; }      // 1-based, 0 when unknown
  int column() const { return column_; }  // 1-based, 0 when unknown

 private:
  std::string message_;
  size_t position_;
  int line_ = 0;
  int column_ = 0;
};

/// Text form of a monomial: '1' or '*'-separated factors 'name' / 'name^k'
/// with k >= 1. Every variable name must belong to the ring.
Monomial parse_monomial(const Ring& ring, const std::string& text);
std::string format_monomial(const Monomial& m);

/// JSON ideal format:
///   {"vars": ["x1", ...], "gens": [[e1, ..., en], ...]}
/// Generators are exponent vectors over vars; the parsed ideal is minimalized.
MonomialIdeal parse_ideal_json(const std::string& text);
std::string format_ideal_json(const MonomialIdeal& I, bool pretty = false);

/// Text ideal format: first line is the variable list, remaining nonempty
/// lines are one monomial each.
///   vars: x1 x2 x3
///   x1*x2
///   x3^2
MonomialIdeal parse_ideal_text(const std::string& text);
std::string format_ideal_text(const MonomialIdeal& I);

/// Reads an ideal from a file path ('-' means stdin), sniffing JSON by the
/// first non-space character '{'.
MonomialIdeal read_ideal(const std::string& path);

/// JSON splitting format over a source ring:
///   {"split": {"x1": 2, "x3": 4}, "default": 1}
/// "default" (optional, 1 if absent) applies to unlisted variables.
SplittingMap parse_splitting_json(const Ring& source, const std::string& text);

/// Betti table text: rows are internal degree d = |a| - i, columns are i,
/// empty cells print as '.'.
std::string format_betti_table_text(const BettiTable& table);
std::string format_betti_table_json(const BettiTable& table, bool pretty = false);
std::string format_betti_data_json(const BettiData& data, bool pretty = false);

}  // namespace monideal
