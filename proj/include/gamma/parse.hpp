#pragma once

#include <string_view>

#include "gamma/ratfn.hpp"

namespace gq {

/// Parse the polynomial grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*'? factor)*
///   factor   := base ('^' int)?
///   base     := rational | 't' | '(' expr ')'
///   rational := int ('/' posint)?
/// Whitespace is insignificant; a leading sign on the first term is accepted.
/// Errors with PARSE_ERROR carrying the offset and the expected token.
LaurentPoly parse_poly(std::string_view text);

/// Same grammar, with '/' additionally allowed between factors (rational
/// function division) and negative powers of non-unit bases.
RationalFn parse_ratfn(std::string_view text);

}  // namespace gq
