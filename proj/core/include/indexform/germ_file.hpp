#ifndef INDEXFORM_GERM_FILE_HPP
#define INDEXFORM_GERM_FILE_HPP

#include <string>
#include <vector>

#include "indexform/germ_problem.hpp"
#include "indexform/poly_parser.hpp"

namespace indexform {

/// Textual germ-problem file:
///   # comment
///   vars: x, y
///   f: x^2 + y^3
///   omega: 3*y^2, -2*x
/// `f:` and `omega:` lines may repeat and may carry comma-separated
/// entries; polynomials follow the poly_parser grammar.
struct GermFile {
    std::vector<std::string> vars;
    std::vector<std::string> f_text;
    std::vector<std::string> omega_text;
};

/// Reads and lexes the file; throws ParseError with line positions.
GermFile read_germ_file(const std::string &path);

/// Builds a validated GermProblem from parsed text fields.
GermProblem germ_from_strings(const std::vector<std::string> &vars,
                              const std::vector<std::string> &f_text,
                              const std::vector<std::string> &omega_text);

/// read_germ_file followed by germ_from_strings.
GermProblem parse_germ_file(const std::string &path);

}  // namespace indexform

#endif
