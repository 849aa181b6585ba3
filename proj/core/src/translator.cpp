#include "visfol/translator.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "visfol/errors.hpp"

namespace visfol {

const char* to_string(TranslationMode m) {
  switch (m) {
    case TranslationMode::Simple:
      return "simple";
    case TranslationMode::Complex:
      return "complex";
    case TranslationMode::Hybrid:
      return "hybrid";
  }
  return "?";
}

TranslationMode translation_mode_from_string(const std::string& s) {
  if (s == "simple") return TranslationMode::Simple;
  if (s == "complex") return TranslationMode::Complex;
  if (s == "hybrid") return TranslationMode::Hybrid;
  throw Error("unknown translation mode '" + s + "'");
}

namespace {

constexpr std::size_t kNoMember = std::numeric_limits<std::size_t>::max();

FormulaPtr unary_atom(const std::string& pred, const Term& t) {
  return Formula::atom(pred, {t});
}

// Unary predicates ordered by (index of first member, name); empty
// extensions sort last.
std::vector<std::string> ordered_unary(const Structure& s) {
  std::vector<std::pair<std::tuple<std::size_t, std::string>, std::string>> keyed;
  for (const auto& [pred, ents] : s.unary()) {
    std::size_t first = kNoMember;
    for (const std::string& e : ents)
      first = std::min(first, s.entity_index(e));
    keyed.push_back({{first, pred}, pred});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& [k, pred] : keyed) out.push_back(pred);
  return out;
}

std::vector<std::string> ordered_binary(const Structure& s) {
  std::vector<
      std::pair<std::tuple<std::size_t, std::size_t, std::string>, std::string>>
      keyed;
  for (const auto& [pred, pairs] : s.binary()) {
    std::size_t fs = kNoMember, fo = kNoMember;
    for (const auto& [subj, obj] : pairs) {
      auto key = std::pair(s.entity_index(subj), s.entity_index(obj));
      if (key < std::pair(fs, fo)) std::tie(fs, fo) = key;
    }
    keyed.push_back({{fs, fo, pred}, pred});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& [k, pred] : keyed) out.push_back(pred);
  return out;
}

// Extension members in domain order.
std::vector<std::string> members_in_order(const Structure& s,
                                          const std::set<std::string>& ents) {
  std::vector<std::string> out(ents.begin(), ents.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return s.entity_index(a) < s.entity_index(b);
  });
  return out;
}

std::vector<Structure::Pair> pairs_in_order(
    const Structure& s, const std::set<Structure::Pair>& pairs) {
  std::vector<Structure::Pair> out(pairs.begin(), pairs.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return std::pair(s.entity_index(a.first), s.entity_index(a.second)) <
           std::pair(s.entity_index(b.first), s.entity_index(b.second));
  });
  return out;
}

FormulaPtr biconditional(FormulaPtr a, FormulaPtr b) {
  return Formula::conjunction(Formula::implication(a, b),
                              Formula::implication(b, a));
}

// forall x. (P(x) <-> x = d1 | ... | x = dk), empty k giving
// forall x. -P(x).
FormulaPtr unary_closure(const std::string& pred,
                         const std::vector<std::string>& members) {
  Term x = Term::variable("x");
  FormulaPtr px = unary_atom(pred, x);
  if (members.empty()) return Formula::forall("x", Formula::negation(px));
  std::vector<FormulaPtr> eqs;
  eqs.reserve(members.size());
  for (const std::string& d : members)
    eqs.push_back(Formula::eq(x, Term::constant(d)));
  return Formula::forall("x", biconditional(px, Formula::disjoin(eqs)));
}

FormulaPtr binary_closure(const std::string& pred,
                          const std::vector<Structure::Pair>& pairs) {
  Term x = Term::variable("x");
  Term y = Term::variable("y");
  FormulaPtr rxy = Formula::atom(pred, {x, y});
  FormulaPtr body;
  if (pairs.empty()) {
    body = Formula::negation(rxy);
  } else {
    std::vector<FormulaPtr> disjuncts;
    disjuncts.reserve(pairs.size());
    for (const auto& [subj, obj] : pairs)
      disjuncts.push_back(
          Formula::conjunction(Formula::eq(x, Term::constant(subj)),
                               Formula::eq(y, Term::constant(obj))));
    body = biconditional(rxy, Formula::disjoin(disjuncts));
  }
  return Formula::forall("x", Formula::forall("y", body));
}

}  // namespace

FormulaPtr translate_simple(const Structure& s, const TranslateOptions& opts) {
  std::vector<FormulaPtr> facts;
  if (opts.include_entity)
    for (const std::string& d : s.domain())
      facts.push_back(unary_atom(kEntityPredicate, Term::constant(d)));
  // Unary facts keyed by (entity, predicate).
  for (const std::string& d : s.domain())
    for (const auto& [pred, ents] : s.unary())
      if (ents.count(d)) facts.push_back(unary_atom(pred, Term::constant(d)));
  // Binary facts keyed by (subject, object, predicate).
  std::vector<std::tuple<std::size_t, std::size_t, std::string, FormulaPtr>>
      rel_facts;
  for (const auto& [pred, pairs] : s.binary())
    for (const auto& [subj, obj] : pairs)
      rel_facts.push_back({s.entity_index(subj), s.entity_index(obj), pred,
                           Formula::atom(pred, {Term::constant(subj),
                                                Term::constant(obj)})});
  std::sort(rel_facts.begin(), rel_facts.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
            });
  for (auto& t : rel_facts) facts.push_back(std::get<3>(t));
  if (facts.empty())
    throw Error(
        "structure has no facts to translate (entity facts are disabled)");
  return Formula::conjoin(facts);
}

FormulaPtr domain_closure(const Structure& s) {
  return unary_closure(kEntityPredicate, s.domain());
}

FormulaPtr translate_complex(const Structure& s, const TranslateOptions& opts) {
  std::vector<FormulaPtr> closures;
  if (opts.include_entity) closures.push_back(domain_closure(s));
  for (const std::string& pred : ordered_unary(s))
    closures.push_back(
        unary_closure(pred, members_in_order(s, s.unary().at(pred))));
  for (const std::string& pred : ordered_binary(s))
    closures.push_back(
        binary_closure(pred, pairs_in_order(s, s.binary().at(pred))));
  if (closures.empty())
    throw Error(
        "structure has no predicates to close (entity closure is disabled)");
  return Formula::conjoin(closures);
}

std::vector<FormulaPtr> unique_name_axioms(const Structure& s) {
  std::vector<FormulaPtr> axioms;
  const auto& d = s.domain();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      axioms.push_back(Formula::negation(
          Formula::eq(Term::constant(d[i]), Term::constant(d[j]))));
  return axioms;
}

std::vector<FormulaPtr> AxiomBundle::premises() const {
  std::vector<FormulaPtr> out;
  if (core) out.push_back(core);
  out.insert(out.end(), unique_names.begin(), unique_names.end());
  if (domain_closure) out.push_back(*domain_closure);
  out.insert(out.end(), query_gap_closures.begin(), query_gap_closures.end());
  return out;
}

AxiomBundle translate(const Structure& s, TranslationMode mode,
                      const FormulaPtr& target, const TranslateOptions& opts) {
  TranslationMode resolved = mode;
  if (mode == TranslationMode::Hybrid)
    resolved = polarity(target) == Polarity::Positive
                   ? TranslationMode::Simple
                   : TranslationMode::Complex;

  AxiomBundle bundle;
  bundle.resolved_mode = resolved;
  if (opts.unique_names) bundle.unique_names = unique_name_axioms(s);

  if (resolved == TranslationMode::Simple) {
    bundle.core = translate_simple(s, opts);
    return bundle;
  }

  TranslateOptions core_opts = opts;
  core_opts.include_entity = false;  // carried in domain_closure instead
  if (!s.unary().empty() || !s.binary().empty())
    bundle.core = translate_complex(s, core_opts);
  if (opts.include_entity) bundle.domain_closure = domain_closure(s);

  Signature sig;
  sig.note_formula(target);
  for (const auto& [pred, arity] : sig.arities()) {
    if (pred == kEntityPredicate) continue;
    bool known = arity == 1 ? s.unary().count(pred) != 0
                            : s.binary().count(pred) != 0;
    if (known) continue;
    bundle.query_gap_closures.push_back(
        arity == 1 ? unary_closure(pred, {}) : binary_closure(pred, {}));
  }
  return bundle;
}

}  // namespace visfol
