#include "visfol/formula.hpp"

#include <cassert>
#include <stdexcept>

#include "visfol/errors.hpp"

namespace visfol {

namespace {

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

const std::string& Formula::predicate() const {
  expect(kind_ == Kind::Atom, "predicate() on non-atom");
  return name_;
}

const std::vector<Term>& Formula::args() const {
  expect(kind_ == Kind::Atom, "args() on non-atom");
  return terms_;
}

const Term& Formula::lhs() const {
  expect(kind_ == Kind::Eq, "lhs() on non-equation");
  return terms_[0];
}

const Term& Formula::rhs() const {
  expect(kind_ == Kind::Eq, "rhs() on non-equation");
  return terms_[1];
}

const FormulaPtr& Formula::child() const {
  expect(kind_ == Kind::Not, "child() on non-negation");
  return first_;
}

const FormulaPtr& Formula::left() const {
  expect(is_binary(), "left() on non-binary node");
  return first_;
}

const FormulaPtr& Formula::right() const {
  expect(is_binary(), "right() on non-binary node");
  return second_;
}

const std::string& Formula::var() const {
  expect(is_quantifier(), "var() on non-quantifier");
  return name_;
}

const FormulaPtr& Formula::body() const {
  expect(is_quantifier(), "body() on non-quantifier");
  return first_;
}

FormulaPtr Formula::atom(std::string predicate, std::vector<Term> args) {
  if (predicate.empty()) throw Error("atom with empty predicate name");
  if (args.empty() || args.size() > 2)
    throw ArityError("predicate '" + predicate + "' applied to " +
                     std::to_string(args.size()) + " arguments");
  auto f = std::shared_ptr<Formula>(new Formula(Kind::Atom));
  f->name_ = std::move(predicate);
  f->terms_ = std::move(args);
  return f;
}

FormulaPtr Formula::eq(Term lhs, Term rhs) {
  auto f = std::shared_ptr<Formula>(new Formula(Kind::Eq));
  f->terms_ = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr Formula::negation(FormulaPtr f) {
  if (!f) throw Error("negation of null formula");
  auto r = std::shared_ptr<Formula>(new Formula(Kind::Not));
  r->first_ = std::move(f);
  return r;
}

FormulaPtr Formula::conjunction(FormulaPtr l, FormulaPtr r) {
  if (!l || !r) throw Error("binary connective with null operand");
  auto f = std::shared_ptr<Formula>(new Formula(Kind::And));
  f->first_ = std::move(l);
  f->second_ = std::move(r);
  return f;
}

FormulaPtr Formula::disjunction(FormulaPtr l, FormulaPtr r) {
  if (!l || !r) throw Error("binary connective with null operand");
  auto f = std::shared_ptr<Formula>(new Formula(Kind::Or));
  f->first_ = std::move(l);
  f->second_ = std::move(r);
  return f;
}

FormulaPtr Formula::implication(FormulaPtr l, FormulaPtr r) {
  if (!l || !r) throw Error("binary connective with null operand");
  auto f = std::shared_ptr<Formula>(new Formula(Kind::Implies));
  f->first_ = std::move(l);
  f->second_ = std::move(r);
  return f;
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  if (var.empty() || is_constant_name(var))
    throw Error("'" + var + "' cannot be bound by a quantifier");
  if (!body) throw Error("quantifier with null body");
  auto f = std::shared_ptr<Formula>(new Formula(Kind::Forall));
  f->name_ = std::move(var);
  f->first_ = std::move(body);
  return f;
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  auto f = forall(std::move(var), std::move(body));
  const_cast<Formula&>(*f).kind_ = Kind::Exists;
  return f;
}

FormulaPtr Formula::conjoin(std::span<const FormulaPtr> fs) {
  if (fs.empty()) throw Error("conjoin of empty list");
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
    acc = conjunction(*it, acc);
  return acc;
}

FormulaPtr Formula::disjoin(std::span<const FormulaPtr> fs) {
  if (fs.empty()) throw Error("disjoin of empty list");
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
    acc = disjunction(*it, acc);
  return acc;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
      return a->predicate() == b->predicate() && a->args() == b->args();
    case Formula::Kind::Eq:
      return a->lhs() == b->lhs() && a->rhs() == b->rhs();
    case Formula::Kind::Not:
      return equal(a->child(), b->child());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->var() == b->var() && equal(a->body(), b->body());
  }
  return false;
}

namespace {

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b,
              std::map<std::string, std::string>& a2b,
              std::map<std::string, std::string>& b2a) {
  if (!a || !b || a->kind() != b->kind()) return false;
  auto term_eq = [&](const Term& x, const Term& y) {
    if (x.is_constant() || y.is_constant()) return x == y;
    auto ia = a2b.find(x.name());
    auto ib = b2a.find(y.name());
    if (ia == a2b.end() && ib == b2a.end()) return x.name() == y.name();
    if (ia == a2b.end() || ib == b2a.end()) return false;
    return ia->second == y.name() && ib->second == x.name();
  };
  switch (a->kind()) {
    case Formula::Kind::Atom: {
      if (a->predicate() != b->predicate() ||
          a->args().size() != b->args().size())
        return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_eq(a->args()[i], b->args()[i])) return false;
      return true;
    }
    case Formula::Kind::Eq:
      return term_eq(a->lhs(), b->lhs()) && term_eq(a->rhs(), b->rhs());
    case Formula::Kind::Not:
      return alpha_eq(a->child(), b->child(), a2b, b2a);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_eq(a->left(), b->left(), a2b, b2a) &&
             alpha_eq(a->right(), b->right(), a2b, b2a);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto sa = a2b.find(a->var());
      auto sb = b2a.find(b->var());
      std::string olda = sa == a2b.end() ? std::string() : sa->second;
      std::string oldb = sb == b2a.end() ? std::string() : sb->second;
      bool hada = sa != a2b.end(), hadb = sb != b2a.end();
      a2b[a->var()] = b->var();
      b2a[b->var()] = a->var();
      bool ok = alpha_eq(a->body(), b->body(), a2b, b2a);
      if (hada)
        a2b[a->var()] = olda;
      else
        a2b.erase(a->var());
      if (hadb)
        b2a[b->var()] = oldb;
      else
        b2a.erase(b->var());
      return ok;
    }
  }
  return false;
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f->args())
        if (t.is_variable() && !bound.count(t.name())) out.insert(t.name());
      return;
    case Formula::Kind::Eq:
      for (const Term* t : {&f->lhs(), &f->rhs()})
        if (t->is_variable() && !bound.count(t->name())) out.insert(t->name());
      return;
    case Formula::Kind::Not:
      collect_free(f->child(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f->left(), bound, out);
      collect_free(f->right(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->var()).second;
      collect_free(f->body(), bound, out);
      if (fresh) bound.erase(f->var());
      return;
    }
  }
}

void collect_constants(const FormulaPtr& f, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  auto add = [&](const Term& t) {
    if (t.is_constant() && seen.insert(t.name()).second)
      out.push_back(t.name());
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f->args()) add(t);
      return;
    case Formula::Kind::Eq:
      add(f->lhs());
      add(f->rhs());
      return;
    case Formula::Kind::Not:
      collect_constants(f->child(), out, seen);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_constants(f->left(), out, seen);
      collect_constants(f->right(), out, seen);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      collect_constants(f->body(), out, seen);
      return;
  }
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string name = base;
  do {
    name += '\'';
  } while (avoid.count(name));
  return name;
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  std::map<std::string, std::string> a2b, b2a;
  return alpha_eq(a, b, a2b, b2a);
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

std::vector<std::string> constants(const FormulaPtr& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_constants(f, out, seen);
  return out;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                      const Term& replacement) {
  auto sub_term = [&](const Term& t) {
    return (t.is_variable() && t.name() == var) ? replacement : t;
  };
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      std::vector<Term> args;
      args.reserve(f->args().size());
      for (const Term& t : f->args()) args.push_back(sub_term(t));
      return Formula::atom(f->predicate(), std::move(args));
    }
    case Formula::Kind::Eq:
      return Formula::eq(sub_term(f->lhs()), sub_term(f->rhs()));
    case Formula::Kind::Not:
      return Formula::negation(substitute(f->child(), var, replacement));
    case Formula::Kind::And:
      return Formula::conjunction(substitute(f->left(), var, replacement),
                                  substitute(f->right(), var, replacement));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute(f->left(), var, replacement),
                                  substitute(f->right(), var, replacement));
    case Formula::Kind::Implies:
      return Formula::implication(substitute(f->left(), var, replacement),
                                  substitute(f->right(), var, replacement));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->var() == var) return f;  // occurrences below are bound
      FormulaPtr body = f->body();
      std::set<std::string> body_free = free_vars(body);
      if (!body_free.count(var)) return f;
      std::string bound = f->var();
      if (replacement.is_variable() && replacement.name() == bound) {
        // The binder would capture the replacement; rename it first.
        std::set<std::string> avoid = std::move(body_free);
        avoid.insert(var);
        avoid.insert(replacement.name());
        std::string renamed = fresh_name(bound, avoid);
        body = substitute(body, bound, Term::variable(renamed));
        bound = renamed;
      }
      body = substitute(body, var, replacement);
      return f->kind() == Formula::Kind::Forall
                 ? Formula::forall(bound, body)
                 : Formula::exists(bound, body);
    }
  }
  throw Error("substitute: unreachable");
}

void Signature::note(const std::string& predicate, int arity) {
  if (arity != 1 && arity != 2)
    throw ArityError("predicate '" + predicate + "' has arity " +
                     std::to_string(arity) + "; only 1 and 2 are allowed");
  auto [it, inserted] = arities_.emplace(predicate, arity);
  if (!inserted && it->second != arity)
    throw ArityError("predicate '" + predicate + "' used with arity " +
                     std::to_string(arity) + " after arity " +
                     std::to_string(it->second));
}

void Signature::note_formula(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      note(f->predicate(), static_cast<int>(f->args().size()));
      return;
    case Formula::Kind::Eq:
      return;
    case Formula::Kind::Not:
      note_formula(f->child());
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      note_formula(f->left());
      note_formula(f->right());
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      note_formula(f->body());
      return;
  }
}

void check_well_formed(const FormulaPtr& f, Signature& sig) {
  sig.note_formula(f);
}

}  // namespace visfol
