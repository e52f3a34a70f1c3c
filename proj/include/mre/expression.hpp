#ifndef MRE_EXPRESSION_HPP
#define MRE_EXPRESSION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mre/labels.hpp"
#include "mre/semiring.hpp"

namespace mre {

// Node kinds, declared in the order used to sort expressions.
enum class ExprKind : std::uint8_t {
  Zero,
  One,
  Atom,
  Sum,
  LeftWeight,
  RightWeight,
  Prod,
  Star,
  Tuple,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// An immutable expression node in normal form: the smart constructors below
// are the only way to build one, and they apply the trivial identities at the
// root.  Children are shared, never copied.
class Expr {
 public:
  ExprKind kind() const { return kind_; }
  int arity() const { return arity_; }
  std::size_t hash() const { return hash_; }

  char letter() const { return letter_; }            // Atom
  const Weight& weight() const { return weight_; }   // LeftWeight/RightWeight
  const ExprPtr& left() const { return left_; }      // also the only child
  const ExprPtr& right() const { return right_; }

  // Total symbol count, parentheses not included.
  int size() const { return size_; }

 private:
  friend class ExprBuilder;
  Expr() = default;

  ExprKind kind_ = ExprKind::Zero;
  char letter_ = 0;
  Weight weight_;
  ExprPtr left_;
  ExprPtr right_;
  int arity_ = 1;
  int size_ = 1;
  std::size_t hash_ = 0;
};

// Smart constructors.  Sum/Prod check that operand arities agree and throw
// ArityMismatchError otherwise; every constructor rewrites the root with the
// applicable trivial identities, so feeding normal operands yields a normal
// result.
ExprPtr mk_zero();
ExprPtr mk_one();
ExprPtr mk_atom(char letter);
ExprPtr mk_sum(const ExprPtr& l, const ExprPtr& r);
ExprPtr mk_prod(const ExprPtr& l, const ExprPtr& r);
ExprPtr mk_star(const ExprPtr& e);
ExprPtr mk_lweight(const Weight& k, const ExprPtr& e);
ExprPtr mk_rweight(const ExprPtr& e, const Weight& k);
ExprPtr mk_tuple(const ExprPtr& l, const ExprPtr& r);

// The arity-k one and zero: a single leaf for k = 1, otherwise a
// left-associated tuple of leaves.
ExprPtr unit_of(int arity);
ExprPtr zero_of(int arity);

// A generator as an expression: Atom/One per component, tupled left to right.
ExprPtr label_expr(const GenLabel& label);

// One, an Atom, or a tuple of such -- the shapes the l<k> => <k>l identity
// commutes past.
bool is_label_like(const Expr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
// Total order: by kind, then lexicographically on letters/weights/children.
int expr_compare(const ExprPtr& a, const ExprPtr& b);

struct ExprLess {
  bool operator()(const ExprPtr& a, const ExprPtr& b) const {
    return expr_compare(a, b) < 0;
  }
};
struct ExprHash {
  std::size_t operator()(const ExprPtr& e) const { return e->hash(); }
};
struct ExprEq {
  bool operator()(const ExprPtr& a, const ExprPtr& b) const {
    return expr_equal(a, b);
  }
};

// Canonical text; parses back to a structurally identical expression.
std::string print_expression(const ExprPtr& e);

// Label occurrences per tape (vector of length arity) and their total.
std::vector<int> widths(const ExprPtr& e);
int width(const ExprPtr& e);

// Checks that e fits the context: its arity is the context's tape count,
// every atom letter belongs to the alphabet of the tape it sits on, weights
// come from the context's semiring, and every starred subterm has a starrable
// constant term.  Returns the arity.
int validate(const ExprPtr& e, const Context& ctx);

}  // namespace mre

#endif
