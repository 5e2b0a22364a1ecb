#pragma once

#include <stdexcept>
#include <string>

#include "bt/padic.hpp"
#include "bt/tree.hpp"

namespace bt {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Literal grammar, evaluated exactly in a given field:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | 'p' | 'pi' | 'u' | 'zeta(' integer ')' | '(' expr ')'
PAdic parse_scalar(const FieldPtr& F, const std::string& text);
/// "a,b;c,d" (row major).
Mat2 parse_matrix(const FieldPtr& F, const std::string& text);
/// "inf", "(x0:x1)" or a scalar z.
ProjPoint parse_point(const FieldPtr& F, const std::string& text);
/// "(n; b)" as printed by BtVertex::key().
BtVertex parse_vertex(const FieldPtr& F, const std::string& text);

}  // namespace bt
