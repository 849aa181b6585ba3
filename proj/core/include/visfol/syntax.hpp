#ifndef VISFOL_SYNTAX_HPP
#define VISFOL_SYNTAX_HPP

#include <string>
#include <string_view>

#include "visfol/formula.hpp"

namespace visfol {

// Text form of formulas:
//
//   exists v. BODY     forall v. BODY      (body extends maximally right)
//   -F                 F & G   F | G   F -> G
//   p(t)   r(t,u)      t = u   t != u      (!= is sugar for -(t = u))
//
// Binary connectives are right-associative with precedence
// - > & > | > ->. Identifiers are [A-Za-z_][A-Za-z0-9_']*; names of the
// shape d<digits> or sk<digits> denote constants.
//
// Throws SyntaxError with a byte offset on malformed input and ArityError
// on inconsistent predicate arities.
FormulaPtr parse_formula(std::string_view text);

// Canonical printing; parse_formula(print_formula(f)) reproduces f.
std::string print_formula(const FormulaPtr& f);

}  // namespace visfol

#endif  // VISFOL_SYNTAX_HPP
