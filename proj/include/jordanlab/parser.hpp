#pragma once

#include <string>

#include "jordanlab/assoc.hpp"
#include "jordanlab/magma.hpp"

namespace jordanlab {

/* Text grammars.
 *
 * Associative expressions: juxtaposition is the product, `+`/`-`, integer
 * and p/q literals, `^` powers, `~` prefix involution, `[a,b]` commutator,
 * `[a]` skew part, `{a}` symmetrize. Example: "[z^2, xy - yx]".
 *
 * Jordan expressions: `*` for the Jordan product (left-normed association),
 * `^` powers, U(f; a, b), R(f; a), D(f; a, b), parentheses, rational
 * coefficients, and catalog:NAME references. Example: "2*U(y; x, z) - x*y".
 *
 * Generators: x y z w, or g<k> for arbitrary indices.
 *
 * Errors are ParseError with line/column and the expected-token set; no
 * input text crashes the parser.
 */
AssocPoly parse_assoc(const std::string& text);
JPoly parse_jordan(const std::string& text);

// A bare word: letters with optional ^ powers, e.g. "xyx^2".
Word parse_word(const std::string& text);

MultiDegree parse_multidegree(const std::string& text);  // "3,3,2"

}  // namespace jordanlab
