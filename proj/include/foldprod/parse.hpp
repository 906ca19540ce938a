#pragma once

#include "foldprod/linear_form.hpp"

#include <stdexcept>
#include <string>

namespace foldprod {

/// Syntax error with 1-based line/column location.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, size_t line, size_t column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}
    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_, column_;
};

/// Parses one linear form in the declared ring.
///
/// Grammar:  form := ['+'|'-'] term (('+'|'-') term)*
///           term := [rational '*'] variable
/// or, vector mode, a whitespace-separated list of exactly nvars rationals.
/// Rationals are int['/'posint]. The Unicode minus sign is accepted as '-'.
/// Rejects nonlinear input, unknown variables, and the zero form.
LinearForm parse_linear_form(const std::string& text, const Ring& ring, size_t line_no = 1);

/// Inverse of parse_linear_form up to formatting: "c1*v1 + c2*v2 - ...".
std::string render_linear_form(const LinearForm& f);

} // namespace foldprod
