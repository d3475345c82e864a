/* parser.hpp
 *
 * Recursive-descent parser for exact polynomial expressions.
 *
 * Grammar:
 *   expr     := term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := base ('^' uint)?
 *   base     := rational | var | '(' expr ')' | '-' factor
 *   rational := uint ('/' uint)?
 *
 * No implicit multiplication. Whitespace-insensitive. Errors carry 1-based
 * line/column positions.
 */
#pragma once

#include "surfparam/multipoly.hpp"

#include <span>
#include <string>

namespace surfparam {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parses `text` over the ordered variable list `vars` (slot i = vars[i]).
MultiPoly parse_polynomial(const std::string& text, std::span<const std::string> vars);

} // namespace surfparam
