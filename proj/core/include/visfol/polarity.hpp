#ifndef VISFOL_POLARITY_HPP
#define VISFOL_POLARITY_HPP

#include "visfol/formula.hpp"

namespace visfol {

enum class Polarity { Positive, Negative };

// Classifies a formula as positive or negative:
//
//   1. atoms are positive, negated atoms negative;
//   2. equations and negated equations are positive;
//   3. a conjunction/disjunction is positive iff both parts are;
//   4. ... and negative iff either part is;
//   5. an implication is positive iff its antecedent is negative and its
//      consequent positive;
//   6. ... and negative otherwise;
//   7./8. quantifiers take the polarity of their body.
//
// Negation of a complex formula is classified by pushing the negation one
// step inward (De Morgan, quantifier duals, -(A -> B) => A & -B) and
// recursing, which keeps the classifier total.
Polarity polarity(const FormulaPtr& f);

const char* to_string(Polarity p);

}  // namespace visfol

#endif  // VISFOL_POLARITY_HPP
