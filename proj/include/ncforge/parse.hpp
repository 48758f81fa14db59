#ifndef NCFORGE_PARSE_HPP
#define NCFORGE_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ncforge/gbasis.hpp"

namespace ncforge {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Expression grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | generator | '(' expr ')'
/// Generator names are matched longest first, so "ab" is a*b when both are
/// single letters. `lhs = rhs` is read as lhs - rhs.
template <Field F>
NcPoly<F> parse_polynomial(const AlgebraPtr<F>& ring, std::string_view text, std::size_t line = 1);

/// First non-comment line `generators: a b c`, then one relation per line.
/// `#` starts a comment.
template <Field F>
Presentation<F> parse_presentation(const F& field, std::string_view text, std::string label = "input");

}  // namespace ncforge

#endif  // NCFORGE_PARSE_HPP
