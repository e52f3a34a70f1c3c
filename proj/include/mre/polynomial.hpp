#ifndef MRE_POLYNOMIAL_HPP
#define MRE_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>

#include "mre/expression.hpp"

namespace mre {

// A finite left-linear combination of expressions: expression -> nonzero
// weight, kept sorted in expression order.  The null polynomial is the empty
// map.
class Polynomial {
 public:
  Polynomial() = default;

  // Accumulates <k>E; drops the entry when the weight cancels to zero.  Zero
  // expressions are never stored.
  void add_monomial(const ExprPtr& e, const Weight& k);

  bool is_null() const { return monomials_.empty(); }
  std::size_t monomial_count() const { return monomials_.size(); }

  const std::map<ExprPtr, Weight, ExprLess>& monomials() const {
    return monomials_;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::map<ExprPtr, Weight, ExprLess> monomials_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
// P.F -- right-multiplies every monomial's expression.
Polynomial poly_rmul_expr(const Polynomial& p, const ExprPtr& f);
// <k>P scales the weights; P<k> right-multiplies the expressions.
Polynomial poly_lmul_weight(const Weight& k, const Polynomial& p);
Polynomial poly_rmul_weight(const Polynomial& p, const Weight& k);
// P (x) Q -- all pairs, weights multiplied; the 1-variants tuple each
// monomial with the arity-wide unit on the indicated side.
Polynomial poly_tuple(const Polynomial& p, const Polynomial& q);
Polynomial poly_tuple_right_one(const Polynomial& p, int unit_arity = 1);
Polynomial poly_tuple_left_one(const Polynomial& p, int unit_arity = 1);

// Projection: the sum of <k_i>E_i in canonical order, or 0 when null.
ExprPtr poly_to_expr(const Polynomial& p);
std::set<ExprPtr, ExprLess> poly_terms(const Polynomial& p);

// Monomials joined by the circled-plus separator, weight-1 monomials bare.
std::string print_polynomial(const Polynomial& p, bool ascii = false);

}  // namespace mre

#endif
