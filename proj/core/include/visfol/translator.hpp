#ifndef VISFOL_TRANSLATOR_HPP
#define VISFOL_TRANSLATOR_HPP

#include <optional>
#include <vector>

#include "visfol/polarity.hpp"
#include "visfol/structure.hpp"

namespace visfol {

enum class TranslationMode { Simple, Complex, Hybrid };

const char* to_string(TranslationMode m);
// Accepts "simple" | "complex" | "hybrid".
TranslationMode translation_mode_from_string(const std::string& s);

struct TranslateOptions {
  // Emit entity(d) facts / the entity closure.
  bool include_entity = true;
  // Emit pairwise distinctness of entity constants. Scene-graph objects
  // are distinct by construction, so this defaults on; without it no
  // counting statement is provable.
  bool unique_names = true;
};

// Conjunction of all facts: entity members first, then unary facts in
// (entity, predicate-name) order, then binary facts in (subject, object,
// predicate-name) order.
FormulaPtr translate_simple(const Structure& s,
                            const TranslateOptions& opts = {});

// Per-predicate closures: forall x. (P(x) <-> x = d1 | ... | x = dk),
// with the biconditional spelled as two implications and the empty
// extension degenerating to forall x. -P(x). Includes the domain closure
// over `entity` first when opts.include_entity is set.
FormulaPtr translate_complex(const Structure& s,
                             const TranslateOptions& opts = {});

// The entity closure alone: forall x. (entity(x) <-> x = d1 | ...).
FormulaPtr domain_closure(const Structure& s);

// {-(di = dj) : i < j} in domain order.
std::vector<FormulaPtr> unique_name_axioms(const Structure& s);

// What a prover run takes as premises. `core` excludes the domain
// closure, which rides along separately when the closure translation is
// selected.
struct AxiomBundle {
  TranslationMode resolved_mode;  // Simple or Complex, never Hybrid
  FormulaPtr core;
  std::vector<FormulaPtr> unique_names;
  std::optional<FormulaPtr> domain_closure;
  // Closed-world closures (forall x. -P(x)) for predicates the target
  // mentions but the structure does not. Only the closure translation
  // needs them: without closing off unknown predicates a negated query
  // about them could never be settled.
  std::vector<FormulaPtr> query_gap_closures;

  std::vector<FormulaPtr> premises() const;
};

// Simple and Complex pick their translation unconditionally; Hybrid
// resolves once on the polarity of the whole target: positive targets
// get the fact conjunction, negative ones the closures.
AxiomBundle translate(const Structure& s, TranslationMode mode,
                      const FormulaPtr& target,
                      const TranslateOptions& opts = {});

}  // namespace visfol

#endif  // VISFOL_TRANSLATOR_HPP
