#ifndef VISFOL_FORMULA_HPP
#define VISFOL_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "visfol/term.hpp"

namespace visfol {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable first-order formula with equality over a function-free
// signature. Atoms take one or two terms; there are no other term
// formers. Nodes are shared freely across threads.
class Formula {
 public:
  enum class Kind { Atom, Eq, Not, And, Or, Implies, Forall, Exists };

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  // Atom
  const std::string& predicate() const;
  const std::vector<Term>& args() const;

  // Eq
  const Term& lhs() const;
  const Term& rhs() const;

  // Not
  const FormulaPtr& child() const;

  // And / Or / Implies
  const FormulaPtr& left() const;
  const FormulaPtr& right() const;

  // Forall / Exists
  const std::string& var() const;
  const FormulaPtr& body() const;

  bool is_quantifier() const {
    return kind_ == Kind::Forall || kind_ == Kind::Exists;
  }
  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies;
  }

  static FormulaPtr atom(std::string predicate, std::vector<Term> args);
  static FormulaPtr eq(Term lhs, Term rhs);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implication(FormulaPtr l, FormulaPtr r);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);

  // Right-associated chain over a nonempty list.
  static FormulaPtr conjoin(std::span<const FormulaPtr> fs);
  static FormulaPtr disjoin(std::span<const FormulaPtr> fs);

 private:
  explicit Formula(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::string name_;            // Atom predicate or quantifier variable
  std::vector<Term> terms_;     // Atom args or Eq {lhs, rhs}
  FormulaPtr first_;            // Not/quantifier child, binary left
  FormulaPtr second_;           // binary right
};

// Structural identity (variable names compared verbatim).
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Identity up to renaming of bound variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const FormulaPtr& f);
bool is_closed(const FormulaPtr& f);

// All constant names occurring in f, in first-occurrence order.
std::vector<std::string> constants(const FormulaPtr& f);

// Capture-avoiding substitution of `replacement` for free occurrences of
// `var`. Binders whose variable would capture the replacement are renamed
// (x -> x', x'', ...).
FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                      const Term& replacement);

// Predicate-name -> arity registry. Arities are fixed by first use and
// conflicts are hard errors, so corpus typos surface immediately.
class Signature {
 public:
  void note(const std::string& predicate, int arity);
  void note_formula(const FormulaPtr& f);
  const std::map<std::string, int>& arities() const { return arities_; }

 private:
  std::map<std::string, int> arities_;
};

// Throws ArityError unless every predicate in f has a single arity in
// {1, 2}; `sig` accumulates across calls.
void check_well_formed(const FormulaPtr& f, Signature& sig);

}  // namespace visfol

#endif  // VISFOL_FORMULA_HPP
