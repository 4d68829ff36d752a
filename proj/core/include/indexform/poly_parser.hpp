#ifndef INDEXFORM_POLY_PARSER_HPP
#define INDEXFORM_POLY_PARSER_HPP

#include <stdexcept>
#include <string>

#include "indexform/polynomial.hpp"

namespace indexform {

/// Syntax error with 1-based line/column position.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses the polynomial text grammar: variables [a-z][a-z0-9]*, integer
/// or a/b rational coefficients, operators + - * ^ and parentheses.
/// Every variable must belong to the ring. Exact; no floating point.
///
/// `line` offsets error positions when the text is embedded in a file.
Poly parse_poly(const std::string &text, const RingPtr &ring, int line = 1);

}  // namespace indexform

#endif
