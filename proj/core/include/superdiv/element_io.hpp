#pragma once

// Interchange formats for elements.
//
// JSON (canonical): {"p":3,"m":2,"n":1,"terms":[{"x":[2,1],"y":[0],"c":1},...]}
// with terms strictly decreasing, no duplicates and 1 <= c < p.
//
// Text: a header line `p=3 m=2 n=1` followed by one line of terms joined by
// ` + `, each `c*monomial` with the coefficient omitted when it is 1, e.g.
// `2*x1^(2)*y1 + x1*y1`. The zero element is written `0`.

#include <stdexcept>
#include <string>
#include <string_view>

#include "superdiv/divalg.hpp"

namespace superdiv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string element_to_json(const Element& f);
/// Strict: rejects unsorted or duplicate terms, out-of-range coefficients
/// and shape mismatches with ParseError.
Element element_from_json(std::string_view text);

std::string element_to_text(const Element& f);
/// Accepts terms in any order (canonicalized) but coefficients must lie in
/// [1, p); throws ParseError otherwise.
Element element_from_text(std::string_view text);

/// Renders the term line only (no header).
std::string terms_to_text(const Element& f);
/// Parses a term line in a known context.
Element terms_from_text(const Context& ctx, std::string_view line);

}  // namespace superdiv
