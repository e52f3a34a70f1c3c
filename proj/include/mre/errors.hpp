#ifndef MRE_ERRORS_HPP
#define MRE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mre {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed context description string ("tapes=...,weights=...").
struct ContextError : Error {
  using Error::Error;
};

// Expression / word / label text that does not scan.
struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        pos(position) {}
  std::size_t pos;
};

// A letter that is not in the alphabet it is used against.
struct UnknownLetterError : Error {
  using Error::Error;
};

// Operands of +, ., or a label/word do not have compatible tape counts.
struct ArityMismatchError : Error {
  using Error::Error;
};

// Validation-level tape inconsistency (expression vs. context).
struct TapeMismatchError : Error {
  using Error::Error;
};

// star(k) has no solution in the active semiring.
struct StarUndefinedError : Error {
  using Error::Error;
};

// A starred subexpression whose constant term is not starrable.  Carries the
// printed offending subterm.
struct NonStarrableError : Error {
  explicit NonStarrableError(const std::string& subterm)
      : Error("constant term of " + subterm + " is not starrable"),
        offending(subterm) {}
  std::string offending;
};

// Right-multiplying an expansion that still has a nonzero constant term.
struct NotProperError : Error {
  using Error::Error;
};

// Automaton JSON that does not match the expected schema.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace mre

#endif
