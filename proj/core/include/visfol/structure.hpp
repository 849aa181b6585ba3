#ifndef VISFOL_STRUCTURE_HPP
#define VISFOL_STRUCTURE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "visfol/formula.hpp"

namespace visfol {

// The predicate reserved for "is in the domain". Structures may not
// declare it; evaluation treats it as the whole domain.
inline constexpr const char* kEntityPredicate = "entity";

// A finite model: an ordered entity domain plus extensions for unary and
// binary predicates. Immutable by convention after construction; all
// mutating helpers validate against the invariants (members of
// extensions belong to the domain, no name is both unary and binary).
class Structure {
 public:
  using Pair = std::pair<std::string, std::string>;

  Structure() = default;

  // Throws Error on duplicate entities or reserved names.
  void add_entity(const std::string& id);
  // Entity must already exist; predicate arities are checked.
  void add_unary(const std::string& predicate, const std::string& entity);
  void add_binary(const std::string& predicate, const std::string& subject,
                  const std::string& object);
  // Registers a predicate with an (initially) empty extension.
  void declare_unary(const std::string& predicate);
  void declare_binary(const std::string& predicate);

  const std::vector<std::string>& domain() const { return domain_; }
  bool has_entity(const std::string& id) const { return index_.count(id); }
  std::size_t entity_index(const std::string& id) const;

  const std::map<std::string, std::set<std::string>>& unary() const {
    return unary_;
  }
  const std::map<std::string, std::set<Pair>>& binary() const {
    return binary_;
  }

  bool holds(const std::string& predicate, const std::string& entity) const;
  bool holds(const std::string& predicate, const std::string& subject,
             const std::string& object) const;

  // Entities satisfying the predicate; empty for unknown names.
  const std::set<std::string>& extension(const std::string& predicate) const;

  // Next unused id in the d<k> sequence (max existing index + 1).
  std::string fresh_entity_id() const;

  const std::string& image_id() const { return image_id_; }
  void set_image_id(std::string id) { image_id_ = std::move(id); }

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.domain_ == b.domain_ && a.unary_ == b.unary_ &&
           a.binary_ == b.binary_;
  }

 private:
  std::vector<std::string> domain_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::set<std::string>> unary_;
  std::map<std::string, std::set<Pair>> binary_;
  std::string image_id_;
};

struct SceneObject {
  std::string id;
  std::string category;
  std::vector<std::string> attributes;
};

struct SceneRelation {
  std::string subject;
  std::string predicate;
  std::string object;
};

struct SceneGraph {
  std::string image_id;
  std::vector<SceneObject> objects;
  std::vector<SceneRelation> relations;
};

// Categories and attributes become unary facts, edges binary facts.
// Throws Error on duplicate object ids or dangling relation endpoints.
Structure scene_graph_to_structure(const SceneGraph& g);

// Inverse direction. `category_of` designates one unary predicate per
// entity as its category (it must hold of the entity); everything else
// becomes an attribute. Throws Error when an entity has no category.
SceneGraph structure_to_scene_graph(
    const Structure& s, const std::map<std::string, std::string>& category_of);

// Truth of a closed formula in the structure. Quantifiers range over the
// domain, equality is identity of entities, and predicates missing from
// the structure denote the empty set, except `entity`, which holds of
// every domain member. Throws EvalError on free variables or constants
// outside the domain.
bool satisfies(const Structure& s, const FormulaPtr& f);

}  // namespace visfol

#endif  // VISFOL_STRUCTURE_HPP
