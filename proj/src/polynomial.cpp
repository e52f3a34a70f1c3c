#include "mre/polynomial.hpp"

#include "mre/errors.hpp"

namespace mre {

void Polynomial::add_monomial(const ExprPtr& e, const Weight& k) {
  if (k.is_zero() || e->kind() == ExprKind::Zero) return;
  auto [it, inserted] = monomials_.emplace(e, k);
  if (!inserted) {
    Weight sum = add(it->second, k);
    if (sum.is_zero())
      monomials_.erase(it);
    else
      it->second = sum;
  }
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.monomials_.size() != b.monomials_.size()) return false;
  auto ia = a.monomials_.begin();
  auto ib = b.monomials_.begin();
  for (; ia != a.monomials_.end(); ++ia, ++ib)
    if (!expr_equal(ia->first, ib->first) || ia->second != ib->second)
      return false;
  return true;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  for (const auto& [e, k] : q.monomials()) out.add_monomial(e, k);
  return out;
}

Polynomial poly_rmul_expr(const Polynomial& p, const ExprPtr& f) {
  Polynomial out;
  for (const auto& [e, k] : p.monomials()) out.add_monomial(mk_prod(e, f), k);
  return out;
}

Polynomial poly_lmul_weight(const Weight& k, const Polynomial& p) {
  if (k.is_one()) return p;
  Polynomial out;
  for (const auto& [e, h] : p.monomials()) out.add_monomial(e, mul(k, h));
  return out;
}

Polynomial poly_rmul_weight(const Polynomial& p, const Weight& k) {
  if (k.is_one()) return p;
  Polynomial out;
  for (const auto& [e, h] : p.monomials()) out.add_monomial(mk_rweight(e, k), h);
  return out;
}

Polynomial poly_tuple(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [e, k] : p.monomials())
    for (const auto& [f, h] : q.monomials())
      out.add_monomial(mk_tuple(e, f), mul(k, h));
  return out;
}

Polynomial poly_tuple_right_one(const Polynomial& p, int unit_arity) {
  Polynomial out;
  ExprPtr unit = unit_of(unit_arity);
  for (const auto& [e, k] : p.monomials()) out.add_monomial(mk_tuple(e, unit), k);
  return out;
}

Polynomial poly_tuple_left_one(const Polynomial& p, int unit_arity) {
  Polynomial out;
  ExprPtr unit = unit_of(unit_arity);
  for (const auto& [e, k] : p.monomials()) out.add_monomial(mk_tuple(unit, e), k);
  return out;
}

ExprPtr poly_to_expr(const Polynomial& p) {
  if (p.is_null()) return mk_zero();
  ExprPtr out;
  for (const auto& [e, k] : p.monomials()) {
    ExprPtr term = mk_lweight(k, e);
    out = out ? mk_sum(out, term) : term;
  }
  return out;
}

std::set<ExprPtr, ExprLess> poly_terms(const Polynomial& p) {
  std::set<ExprPtr, ExprLess> out;
  for (const auto& [e, k] : p.monomials()) out.insert(e);
  return out;
}

std::string print_polynomial(const Polynomial& p, bool ascii) {
  if (p.is_null()) return "<0>";
  const char* oplus = ascii ? " (+) " : " ⊕ ";
  const char* odot = ascii ? "(.)" : "⊙";
  std::string out;
  bool first = true;
  for (const auto& [e, k] : p.monomials()) {
    if (!first) out += oplus;
    first = false;
    if (!k.is_one()) {
      out += '<';
      out += k.to_string();
      out += '>';
      out += odot;
    }
    out += print_expression(e);
  }
  return out;
}

}  // namespace mre
