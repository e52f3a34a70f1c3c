#include "mre/derivative.hpp"

#include "mre/errors.hpp"

namespace mre {

Weight constant_term(const ExprPtr& e, SemiringKind kind) {
  switch (e->kind()) {
    case ExprKind::Zero:
      return Weight::zero(kind);
    case ExprKind::One:
      return Weight::one(kind);
    case ExprKind::Atom:
      return Weight::zero(kind);
    case ExprKind::Sum:
      return add(constant_term(e->left(), kind), constant_term(e->right(), kind));
    case ExprKind::LeftWeight:
      return mul(e->weight(), constant_term(e->left(), kind));
    case ExprKind::RightWeight:
      return mul(constant_term(e->left(), kind), e->weight());
    case ExprKind::Prod:
    case ExprKind::Tuple:
      return mul(constant_term(e->left(), kind), constant_term(e->right(), kind));
    case ExprKind::Star: {
      Weight c = constant_term(e->left(), kind);
      if (!starrable(c)) throw NonStarrableError(print_expression(e));
      return star(c);
    }
  }
  throw Error("unreachable");
}

namespace {

GenLabel slice(const GenLabel& a, int from, int count) {
  GenLabel out;
  out.components.assign(a.components.begin() + from,
                        a.components.begin() + from + count);
  return out;
}

}  // namespace

Polynomial derivative(const ExprPtr& e, const GenLabel& a, SemiringKind kind) {
  if (a.arity() != e->arity())
    throw ArityMismatchError("derivative by a label of arity " +
                             std::to_string(a.arity()) +
                             " of an expression with " +
                             std::to_string(e->arity()) + " tape(s)");
  Polynomial null;
  switch (e->kind()) {
    case ExprKind::Zero:
    case ExprKind::One:
      return null;
    case ExprKind::Atom: {
      Polynomial p;
      if (!a.components[0].empty() && a.components[0][0] == e->letter())
        p.add_monomial(mk_one(), Weight::one(kind));
      return p;
    }
    case ExprKind::Sum:
      return poly_add(derivative(e->left(), a, kind), derivative(e->right(), a, kind));
    case ExprKind::LeftWeight:
      return poly_lmul_weight(e->weight(), derivative(e->left(), a, kind));
    case ExprKind::RightWeight:
      return poly_rmul_weight(derivative(e->left(), a, kind), e->weight());
    case ExprKind::Prod: {
      Polynomial out = poly_rmul_expr(derivative(e->left(), a, kind), e->right());
      Weight c = constant_term(e->left(), kind);
      if (!c.is_zero())
        out = poly_add(out, poly_lmul_weight(c, derivative(e->right(), a, kind)));
      return out;
    }
    case ExprKind::Star: {
      Weight s = star(constant_term(e->left(), kind));
      return poly_lmul_weight(s, poly_rmul_expr(derivative(e->left(), a, kind), e));
    }
    case ExprKind::Tuple: {
      int p = e->left()->arity();
      int q = e->right()->arity();
      GenLabel la = slice(a, 0, p);
      GenLabel rb = slice(a, p, q);
      if (rb.all_epsilon()) {
        // d_{a|eps}(E|F) := <c(F)>(d_a(E) (x) 1)
        Weight c = constant_term(e->right(), kind);
        return poly_lmul_weight(
            c, poly_tuple_right_one(derivative(e->left(), la, kind), q));
      }
      if (la.all_epsilon()) {
        // d_{eps|b}(E|F) := <c(E)>(1 (x) d_b(F))
        Weight c = constant_term(e->left(), kind);
        return poly_lmul_weight(
            c, poly_tuple_left_one(derivative(e->right(), rb, kind), p));
      }
      // d_{a|b}(E|F) := d_a(E) (x) d_b(F)
      return poly_tuple(derivative(e->left(), la, kind),
                        derivative(e->right(), rb, kind));
    }
  }
  throw Error("unreachable");
}

}  // namespace mre
