#include "visfol/structure.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "visfol/errors.hpp"

namespace visfol {

void Structure::add_entity(const std::string& id) {
  if (id.empty()) throw Error("entity id must be nonempty");
  if (index_.count(id)) throw Error("duplicate entity id '" + id + "'");
  index_[id] = domain_.size();
  domain_.push_back(id);
}

void Structure::add_unary(const std::string& predicate,
                          const std::string& entity) {
  if (predicate == kEntityPredicate)
    throw Error("'entity' is reserved for the domain predicate");
  if (!index_.count(entity))
    throw Error("unary fact " + predicate + "(" + entity +
                ") mentions an undeclared entity");
  if (binary_.count(predicate))
    throw ArityError("predicate '" + predicate +
                     "' is already binary in this structure");
  unary_[predicate].insert(entity);
}

void Structure::add_binary(const std::string& predicate,
                           const std::string& subject,
                           const std::string& object) {
  if (predicate == kEntityPredicate)
    throw Error("'entity' is reserved for the domain predicate");
  if (!index_.count(subject) || !index_.count(object))
    throw Error("relation " + predicate + "(" + subject + "," + object +
                ") mentions an undeclared entity");
  if (unary_.count(predicate))
    throw ArityError("predicate '" + predicate +
                     "' is already unary in this structure");
  binary_[predicate].insert({subject, object});
}

void Structure::declare_unary(const std::string& predicate) {
  if (predicate == kEntityPredicate)
    throw Error("'entity' is reserved for the domain predicate");
  if (binary_.count(predicate))
    throw ArityError("predicate '" + predicate +
                     "' is already binary in this structure");
  unary_[predicate];
}

void Structure::declare_binary(const std::string& predicate) {
  if (predicate == kEntityPredicate)
    throw Error("'entity' is reserved for the domain predicate");
  if (unary_.count(predicate))
    throw ArityError("predicate '" + predicate +
                     "' is already unary in this structure");
  binary_[predicate];
}

std::size_t Structure::entity_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown entity '" + id + "'");
  return it->second;
}

bool Structure::holds(const std::string& predicate,
                      const std::string& entity) const {
  if (predicate == kEntityPredicate) return index_.count(entity) != 0;
  auto it = unary_.find(predicate);
  return it != unary_.end() && it->second.count(entity) != 0;
}

bool Structure::holds(const std::string& predicate, const std::string& subject,
                      const std::string& object) const {
  auto it = binary_.find(predicate);
  return it != binary_.end() && it->second.count({subject, object}) != 0;
}

const std::set<std::string>& Structure::extension(
    const std::string& predicate) const {
  static const std::set<std::string> empty;
  auto it = unary_.find(predicate);
  return it == unary_.end() ? empty : it->second;
}

std::string Structure::fresh_entity_id() const {
  std::size_t next = 1;
  for (const std::string& id : domain_) {
    if (id.size() > 1 && id[0] == 'd') {
      std::size_t k = 0;
      bool numeric = true;
      for (std::size_t i = 1; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) {
          numeric = false;
          break;
        }
        k = k * 10 + static_cast<std::size_t>(id[i] - '0');
      }
      if (numeric) next = std::max(next, k + 1);
    }
  }
  return "d" + std::to_string(next);
}

Structure scene_graph_to_structure(const SceneGraph& g) {
  Structure s;
  s.set_image_id(g.image_id);
  for (const SceneObject& o : g.objects) s.add_entity(o.id);
  for (const SceneObject& o : g.objects) {
    if (o.category.empty())
      throw Error("object '" + o.id + "' has no category");
    s.add_unary(o.category, o.id);
    for (const std::string& a : o.attributes) s.add_unary(a, o.id);
  }
  for (const SceneRelation& r : g.relations)
    s.add_binary(r.predicate, r.subject, r.object);
  return s;
}

SceneGraph structure_to_scene_graph(
    const Structure& s,
    const std::map<std::string, std::string>& category_of) {
  SceneGraph g;
  g.image_id = s.image_id();
  for (const std::string& id : s.domain()) {
    auto it = category_of.find(id);
    if (it == category_of.end())
      throw Error("entity '" + id + "' has no category designated");
    if (!s.holds(it->second, id))
      throw Error("designated category " + it->second +
                  " does not hold of entity '" + id + "'");
    SceneObject o;
    o.id = id;
    o.category = it->second;
    for (const auto& [pred, ents] : s.unary())
      if (pred != o.category && ents.count(id)) o.attributes.push_back(pred);
    g.objects.push_back(std::move(o));
  }
  for (const auto& [pred, pairs] : s.binary())
    for (const auto& [subj, obj] : pairs)
      g.relations.push_back({subj, pred, obj});
  std::sort(g.relations.begin(), g.relations.end(),
            [&](const SceneRelation& a, const SceneRelation& b) {
              auto ka = std::tuple(s.entity_index(a.subject),
                                   s.entity_index(a.object), a.predicate);
              auto kb = std::tuple(s.entity_index(b.subject),
                                   s.entity_index(b.object), b.predicate);
              return ka < kb;
            });
  return g;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Structure& s) : s_(s) {}

  bool eval(const FormulaPtr& f) {
    switch (f->kind()) {
      case Formula::Kind::Atom: {
        if (f->args().size() == 1)
          return s_.holds(f->predicate(), entity(f->args()[0]));
        return s_.holds(f->predicate(), entity(f->args()[0]),
                        entity(f->args()[1]));
      }
      case Formula::Kind::Eq:
        return entity(f->lhs()) == entity(f->rhs());
      case Formula::Kind::Not:
        return !eval(f->child());
      case Formula::Kind::And:
        return eval(f->left()) && eval(f->right());
      case Formula::Kind::Or:
        return eval(f->left()) || eval(f->right());
      case Formula::Kind::Implies:
        return !eval(f->left()) || eval(f->right());
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bool want = f->is(Formula::Kind::Exists);
        auto saved = env_.find(f->var()) != env_.end()
                         ? std::optional(env_[f->var()])
                         : std::nullopt;
        bool result = !want;
        for (const std::string& d : s_.domain()) {
          env_[f->var()] = d;
          if (eval(f->body()) == want) {
            result = want;
            break;
          }
        }
        if (saved)
          env_[f->var()] = *saved;
        else
          env_.erase(f->var());
        return result;
      }
    }
    throw EvalError("unreachable formula kind");
  }

 private:
  const std::string& entity(const Term& t) {
    if (t.is_constant()) {
      if (!s_.has_entity(t.name()))
        throw EvalError("constant '" + t.name() + "' is not in the domain");
      return t.name();
    }
    auto it = env_.find(t.name());
    if (it == env_.end())
      throw EvalError("free variable '" + t.name() + "' in evaluated formula");
    return it->second;
  }

  const Structure& s_;
  std::map<std::string, std::string> env_;
};

}  // namespace

bool satisfies(const Structure& s, const FormulaPtr& f) {
  if (!is_closed(f)) {
    auto fv = free_vars(f);
    throw EvalError("formula has free variable '" + *fv.begin() + "'");
  }
  for (const std::string& c : constants(f))
    if (!s.has_entity(c))
      throw EvalError("constant '" + c + "' is not in the domain");
  return Evaluator(s).eval(f);
}

}  // namespace visfol
