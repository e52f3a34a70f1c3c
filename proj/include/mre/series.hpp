#ifndef MRE_SERIES_HPP
#define MRE_SERIES_HPP

#include <map>
#include <optional>

#include "mre/automaton.hpp"
#include "mre/expression.hpp"
#include "mre/labels.hpp"

namespace mre {

// Reference semantics: a series truncated to a gradation bound, computed by
// brute force.  Shares only the expression AST and the semiring with the
// expansion/derivative pipeline, so it serves as an independent oracle.
class TruncatedSeries {
 public:
  TruncatedSeries(SemiringKind kind, int arity, int bound)
      : kind_(kind), arity_(arity), bound_(bound) {}

  SemiringKind kind() const { return kind_; }
  int arity() const { return arity_; }
  int bound() const { return bound_; }

  Weight at(const MonoidElement& m) const;
  // Accumulates; entries beyond the bound are ignored, zeros are dropped.
  void add_coeff(const MonoidElement& m, const Weight& k);

  const std::map<MonoidElement, Weight, GradedLess>& coeffs() const {
    return coeffs_;
  }

  friend bool operator==(const TruncatedSeries& s, const TruncatedSeries& t);

 private:
  SemiringKind kind_;
  int arity_;
  int bound_;
  std::map<MonoidElement, Weight, GradedLess> coeffs_;
};

TruncatedSeries ts_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries ts_lmul(const Weight& k, const TruncatedSeries& s);
TruncatedSeries ts_rmul(const TruncatedSeries& s, const Weight& k);
// Truncated Cauchy product.
TruncatedSeries ts_cauchy(const TruncatedSeries& s, const TruncatedSeries& t);
// Star via the development s* = se + se.sp.s*, iterated to the bound plus
// two passes; a failure to stabilize is a bug and throws.
TruncatedSeries ts_star(const TruncatedSeries& s);
TruncatedSeries ts_tuple(const TruncatedSeries& s, const TruncatedSeries& t);

// [[e]] truncated to the bound.  Propagates StarUndefinedError.
TruncatedSeries series_of_expr(const ExprPtr& e, SemiringKind kind, int bound);

// The behavior of a proper automaton, by enumerating all computations of
// gradation at most the bound.
TruncatedSeries series_of_automaton(const Automaton& a, int bound);

// nullopt when equal up to the bound; otherwise the first differing element
// in gradation-then-label order.
std::optional<MonoidElement> bounded_equiv(const TruncatedSeries& s,
                                           const TruncatedSeries& t);
std::optional<MonoidElement> bounded_equiv(const ExprPtr& e, const ExprPtr& f,
                                           SemiringKind kind, int bound);

}  // namespace mre

#endif
