#include "visfol/term.hpp"

#include <cctype>

namespace visfol {

bool is_constant_name(std::string_view name) {
  std::string_view digits;
  if (name.size() >= 2 && name[0] == 'd') {
    digits = name.substr(1);
  } else if (name.size() >= 3 && name[0] == 's' && name[1] == 'k') {
    digits = name.substr(2);
  } else {
    return false;
  }
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Term Term::variable(std::string name) {
  return Term(Kind::Variable, std::move(name));
}

Term Term::constant(std::string name) {
  return Term(Kind::Constant, std::move(name));
}

Term Term::from_name(std::string name) {
  Kind k = is_constant_name(name) ? Kind::Constant : Kind::Variable;
  return Term(k, std::move(name));
}

}  // namespace visfol
