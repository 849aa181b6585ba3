#ifndef VISFOL_ERRORS_HPP
#define VISFOL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace visfol {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed formula text. Carries the byte offset of the first offending
// character.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A predicate used with two different arities, or with an arity other
// than 1 or 2.
class ArityError : public Error {
 public:
  using Error::Error;
};

// JSON input that does not match the expected schema. `pointer` is a
// JSON-pointer-style path to the offending element.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, const std::string& pointer)
      : Error(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Evaluation of a formula against a structure hit a precondition
// violation (free variable, constant outside the domain).
class EvalError : public Error {
 public:
  using Error::Error;
};

// The input formula falls outside the decidable fragment the prover
// handles (an existential quantifier in the scope of a universal one
// after refutation setup).
class FragmentError : public Error {
 public:
  using Error::Error;
};

// Sentence-level parse failures (unknown word, no derivation, ambiguity).
class SentenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace visfol

#endif  // VISFOL_ERRORS_HPP
