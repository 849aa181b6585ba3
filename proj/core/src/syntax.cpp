#include "visfol/syntax.hpp"

#include <cctype>

#include "visfol/errors.hpp"

namespace visfol {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr run() {
    FormulaPtr f = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    Signature sig;
    check_well_formed(f, sig);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FormulaPtr parse_implies() {
    FormulaPtr l = parse_or();
    if (eat("->")) return Formula::implication(l, parse_implies());
    return l;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      return Formula::disjunction(l, parse_or());
    }
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    if (eat('&')) return Formula::conjunction(l, parse_and());
    return l;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-' &&
        text_.substr(pos_, 2) != "->") {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      FormulaPtr f = parse_implies();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    std::size_t word_at = pos_;
    std::string name = ident();
    if (name == "exists" || name == "forall") {
      std::string v = ident();
      if (is_constant_name(v)) {
        pos_ = word_at;
        fail("cannot bind constant '" + v + "'");
      }
      if (!eat('.')) fail("expected '.' after quantified variable");
      FormulaPtr body = parse_implies();
      return name == "exists" ? Formula::exists(v, body)
                              : Formula::forall(v, body);
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<Term> args;
      args.push_back(Term::from_name(ident()));
      if (eat(',')) args.push_back(Term::from_name(ident()));
      if (!eat(')')) fail("expected ')' after predicate arguments");
      if (is_constant_name(name)) {
        pos_ = word_at;
        fail("constant '" + name + "' used as a predicate");
      }
      return Formula::atom(name, std::move(args));
    }
    // A bare term: must start an equation.
    Term l = Term::from_name(name);
    if (eat("!=")) return Formula::negation(Formula::eq(l, parse_term()));
    if (eat('=')) return Formula::eq(l, parse_term());
    fail("expected '(' arguments, '=', or '!=' after '" + name + "'");
  }

  Term parse_term() { return Term::from_name(ident()); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Printing levels; higher binds tighter. Right child of a binary node may
// be at the same level (right associativity), the left child must bind
// strictly tighter.
int level_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    default:
      return 5;
  }
}

void print(const FormulaPtr& f, int min_level, bool rightmost,
           std::string& out);

void print_paren(const FormulaPtr& f, std::string& out) {
  out += '(';
  print(f, 0, true, out);
  out += ')';
}

// `rightmost`: nothing follows this subformula in the current scope, so a
// quantifier here can keep its maximal-scope spelling without parentheses.
void print(const FormulaPtr& f, int min_level, bool rightmost,
           std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      out += f->predicate();
      out += '(';
      out += f->args()[0].name();
      if (f->args().size() == 2) {
        out += ',';
        out += f->args()[1].name();
      }
      out += ')';
      return;
    }
    case Formula::Kind::Eq:
      out += f->lhs().name();
      out += " = ";
      out += f->rhs().name();
      return;
    case Formula::Kind::Not: {
      out += '-';
      const FormulaPtr& c = f->child();
      if (c->is(Formula::Kind::Atom) || c->is(Formula::Kind::Not)) {
        print(c, 4, rightmost, out);
      } else if (c->is_quantifier() && rightmost) {
        print(c, 0, true, out);
      } else {
        print_paren(c, out);
      }
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      int lv = level_of(*f);
      if (lv < min_level) {
        print_paren(f, out);
        return;
      }
      const char* op = f->is(Formula::Kind::And)   ? " & "
                       : f->is(Formula::Kind::Or)  ? " | "
                                                   : " -> ";
      const FormulaPtr& l = f->left();
      if (l->is_quantifier())
        print_paren(l, out);
      else
        print(l, lv + 1, false, out);
      out += op;
      print(f->right(), lv, rightmost, out);
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (!rightmost) {
        print_paren(f, out);
        return;
      }
      out += f->is(Formula::Kind::Forall) ? "forall " : "exists ";
      out += f->var();
      out += ". ";
      if (f->body()->is_binary())
        print_paren(f->body(), out);
      else
        print(f->body(), 0, true, out);
      return;
    }
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print(f, 0, true, out);
  return out;
}

}  // namespace visfol
