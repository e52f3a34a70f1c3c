#ifndef MRE_LABELS_HPP
#define MRE_LABELS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mre/semiring.hpp"

namespace mre {

// A context fixes the shape of the product monoid (one finite alphabet of
// single characters per tape) and the weight semiring.  Text form:
//   tapes=ab;xy,weights=q
struct Context {
  std::vector<std::string> tapes;  // each alphabet sorted, duplicates removed
  SemiringKind weights = SemiringKind::Boolean;

  static Context parse(const std::string& description);
  std::string to_string() const;

  int tape_count() const { return static_cast<int>(tapes.size()); }
  bool letter_on_tape(char letter, int tape) const;
  // True when the letter occurs in at least one alphabet.
  bool letter_anywhere(char letter) const;

  friend bool operator==(const Context&, const Context&) = default;
};

// One generator of the product monoid: a letter or epsilon per tape, not all
// epsilon.  Epsilon components are empty strings, letters are one character.
struct GenLabel {
  std::vector<std::string> components;

  int arity() const { return static_cast<int>(components.size()); }
  bool all_epsilon() const;
  int gradation() const;

  // Text form: components joined by '|', epsilon written \e; single tape
  // labels print bare.
  std::string to_string() const;
  static GenLabel parse(const std::string& text, const Context& ctx);

  // Epsilon before every letter, letters in character order, tape by tape.
  friend std::strong_ordering operator<=>(const GenLabel&, const GenLabel&) = default;
};

// An element of the product monoid: one finite word per tape.
struct MonoidElement {
  std::vector<std::string> words;

  static MonoidElement epsilon(int arity);
  static MonoidElement parse(const std::string& text);  // CLI word syntax

  int arity() const { return static_cast<int>(words.size()); }
  int gradation() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const MonoidElement&, const MonoidElement&) = default;
};

// Componentwise concatenation; throws ArityMismatchError on unequal arities.
MonoidElement concat(const MonoidElement& m, const MonoidElement& n);

// Embeds a generator as a monoid element.
MonoidElement lift(const GenLabel& a);

// The unique m_a with m = a . m_a when every component of a is a prefix of
// the corresponding word of m; nullopt otherwise.
std::optional<MonoidElement> factorizations(const MonoidElement& m, const GenLabel& a);

// Orders monoid elements by gradation first, then lexicographically by words.
struct GradedLess {
  bool operator()(const MonoidElement& a, const MonoidElement& b) const;
};

}  // namespace mre

#endif
