#include "visfol/polarity.hpp"

#include "visfol/errors.hpp"

namespace visfol {

namespace {

Polarity both_or_either(Polarity a, Polarity b) {
  return (a == Polarity::Positive && b == Polarity::Positive)
             ? Polarity::Positive
             : Polarity::Negative;
}

}  // namespace

Polarity polarity(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind()) {
    case K::Atom:
    case K::Eq:
      return Polarity::Positive;
    case K::And:
    case K::Or:
      return both_or_either(polarity(f->left()), polarity(f->right()));
    case K::Implies:
      return (polarity(f->left()) == Polarity::Negative &&
              polarity(f->right()) == Polarity::Positive)
                 ? Polarity::Positive
                 : Polarity::Negative;
    case K::Forall:
    case K::Exists:
      return polarity(f->body());
    case K::Not: {
      const FormulaPtr& g = f->child();
      switch (g->kind()) {
        case K::Atom:
          return Polarity::Negative;
        case K::Eq:
          return Polarity::Positive;
        case K::Not:
          return polarity(g->child());
        case K::And:
          return both_or_either(polarity(Formula::negation(g->left())),
                                polarity(Formula::negation(g->right())));
        case K::Or:
          return both_or_either(polarity(Formula::negation(g->left())),
                                polarity(Formula::negation(g->right())));
        case K::Implies:
          // -(A -> B) classifies as A & -B.
          return both_or_either(polarity(g->left()),
                                polarity(Formula::negation(g->right())));
        case K::Forall:
        case K::Exists:
          return polarity(Formula::negation(g->body()));
      }
      throw Error("polarity: unreachable");
    }
  }
  throw Error("polarity: unreachable");
}

const char* to_string(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

}  // namespace visfol
