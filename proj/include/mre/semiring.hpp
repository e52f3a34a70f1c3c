#ifndef MRE_SEMIRING_HPP
#define MRE_SEMIRING_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "mre/errors.hpp"

namespace mre {

// The commutative weight semirings this library ships with.
//   Boolean   (b): <{0,1}, or, and>, star(k) = 1 always.
//   Integers  (z): <Z, +, *>, star(k) defined iff k = 0.
//   Rationals (q): exact fractions, star(k) = 1/(1-k) iff k != 1.
enum class SemiringKind : std::uint8_t { Boolean, Integers, Rationals };

SemiringKind semiring_from_token(const std::string& token);
std::string semiring_token(SemiringKind kind);

// An element of one of the semirings above.  Values are immutable and exact:
// rationals are kept normalized (lowest terms, positive denominator) so that
// equality is structural.
class Weight {
 public:
  Weight() : kind_(SemiringKind::Integers), num_(0), den_(1) {}

  static Weight zero(SemiringKind kind);
  static Weight one(SemiringKind kind);
  static Weight boolean(bool value);
  static Weight integer(std::int64_t value);
  static Weight rational(std::int64_t num, std::int64_t den);

  // Parses the textual form used everywhere (CLI, JSON, expression <k>
  // literals): "0"/"1" for B, decimal for Z, "p/q" or "p" for Q.
  static Weight parse(SemiringKind kind, const std::string& text);

  SemiringKind kind() const { return kind_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  std::string to_string() const;

  friend Weight add(const Weight& a, const Weight& b);
  friend Weight mul(const Weight& a, const Weight& b);

  // The unique solution of x = 1 + k*x, per-instance rule above.  Throws
  // StarUndefinedError when there is none.
  friend Weight star(const Weight& k);
  friend bool starrable(const Weight& k);

  friend bool operator==(const Weight& a, const Weight& b) = default;

  // Total order within one semiring; used only to sort expressions.
  friend int weight_compare(const Weight& a, const Weight& b);

  std::size_t hash() const;

 private:
  Weight(SemiringKind kind, std::int64_t num, std::int64_t den)
      : kind_(kind), num_(num), den_(den) {}

  SemiringKind kind_;
  std::int64_t num_;
  std::int64_t den_;  // always 1 outside Rationals
};

}  // namespace mre

#endif
