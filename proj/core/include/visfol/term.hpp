#ifndef VISFOL_TERM_HPP
#define VISFOL_TERM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace visfol {

// Constants are entity ids (d1, d2, ...) or refutation witnesses
// (sk1, sk2, ...); every other identifier is a variable. The language
// is function-free, so a term is always a bare name.
bool is_constant_name(std::string_view name);

class Term {
 public:
  enum class Kind { Variable, Constant };

  static Term variable(std::string name);
  static Term constant(std::string name);
  // Classifies the name by the d<digits>/sk<digits> convention.
  static Term from_name(std::string name);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  const std::string& name() const { return name_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
};

}  // namespace visfol

#endif  // VISFOL_TERM_HPP
