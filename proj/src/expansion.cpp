#include "mre/expansion.hpp"

#include "mre/errors.hpp"

namespace mre {

const Polynomial& Expansion::at(const GenLabel& a) const {
  static const Polynomial null;
  auto it = terms_.find(a);
  return it == terms_.end() ? null : it->second;
}

void Expansion::add_term(const GenLabel& a, const Polynomial& p) {
  if (p.is_null()) return;
  auto [it, inserted] = terms_.emplace(a, p);
  if (!inserted) {
    it->second = poly_add(it->second, p);
    if (it->second.is_null()) terms_.erase(it);
  }
}

bool operator==(const Expansion& x, const Expansion& y) {
  return x.arity_ == y.arity_ && x.constant_ == y.constant_ && x.terms_ == y.terms_;
}

Expansion xpn_add(const Expansion& x, const Expansion& y) {
  if (x.arity() != y.arity())
    throw ArityMismatchError("adding expansions of arities " +
                             std::to_string(x.arity()) + " and " +
                             std::to_string(y.arity()));
  Expansion out(add(x.constant(), y.constant()), x.arity());
  for (const auto& [a, p] : x.terms()) out.add_term(a, p);
  for (const auto& [a, p] : y.terms()) out.add_term(a, p);
  return out;
}

Expansion xpn_lmul(const Weight& k, const Expansion& x) {
  if (k.is_one()) return x;
  Expansion out(mul(k, x.constant()), x.arity());
  for (const auto& [a, p] : x.terms()) out.add_term(a, poly_lmul_weight(k, p));
  return out;
}

Expansion xpn_rmul(const Expansion& x, const Weight& k) {
  if (k.is_one()) return x;
  Expansion out(mul(x.constant(), k), x.arity());
  for (const auto& [a, p] : x.terms()) out.add_term(a, poly_rmul_weight(p, k));
  return out;
}

Expansion xpn_rmul_expr(const Expansion& x, const ExprPtr& e) {
  if (!x.is_proper())
    throw NotProperError("right-multiplying an expansion with constant term " +
                         x.constant().to_string());
  Expansion out(x.constant(), x.arity());
  for (const auto& [a, p] : x.terms()) out.add_term(a, poly_rmul_expr(p, e));
  return out;
}

namespace {

GenLabel pad_right(const GenLabel& a, int eps) {
  GenLabel out = a;
  out.components.insert(out.components.end(), static_cast<std::size_t>(eps),
                        std::string());
  return out;
}

GenLabel pad_left(int eps, const GenLabel& b) {
  GenLabel out;
  out.components.assign(static_cast<std::size_t>(eps), std::string());
  out.components.insert(out.components.end(), b.components.begin(),
                        b.components.end());
  return out;
}

GenLabel join(const GenLabel& a, const GenLabel& b) {
  GenLabel out = a;
  out.components.insert(out.components.end(), b.components.begin(),
                        b.components.end());
  return out;
}

}  // namespace

Expansion xpn_tuple(const Expansion& x, const Expansion& y) {
  int p = x.arity(), q = y.arity();
  Expansion out(mul(x.constant(), y.constant()), p + q);
  if (!x.constant().is_zero())
    for (const auto& [b, poly] : y.terms())
      out.add_term(pad_left(p, b),
                   poly_lmul_weight(x.constant(), poly_tuple_left_one(poly, p)));
  if (!y.constant().is_zero())
    for (const auto& [a, poly] : x.terms())
      out.add_term(pad_right(a, q),
                   poly_lmul_weight(y.constant(), poly_tuple_right_one(poly, q)));
  for (const auto& [a, pa] : x.terms())
    for (const auto& [b, pb] : y.terms())
      out.add_term(join(a, b), poly_tuple(pa, pb));
  return out;
}

ExprPtr xpn_to_expr(const Expansion& x) {
  ExprPtr out;
  if (!x.constant().is_zero())
    out = mk_lweight(x.constant(), unit_of(x.arity()));
  for (const auto& [a, p] : x.terms()) {
    ExprPtr term = mk_prod(label_expr(a), poly_to_expr(p));
    out = out ? mk_sum(out, term) : term;
  }
  return out ? out : zero_of(x.arity());
}

std::set<ExprPtr, ExprLess> xpn_terms(const Expansion& x) {
  std::set<ExprPtr, ExprLess> out;
  for (const auto& [a, p] : x.terms())
    for (const auto& [e, k] : p.monomials()) out.insert(e);
  return out;
}

namespace {

Expansion expand(const ExprPtr& e, SemiringKind kind, ExpansionCache& cache) {
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  Expansion out = Expansion::null(kind, e->arity());
  switch (e->kind()) {
    case ExprKind::Zero:
      break;  // <0>
    case ExprKind::One:
      out.set_constant(Weight::one(kind));
      break;
    case ExprKind::Atom: {
      GenLabel a;
      a.components.push_back(std::string(1, e->letter()));
      Polynomial p;
      p.add_monomial(mk_one(), Weight::one(kind));
      out.add_term(a, p);
      break;
    }
    case ExprKind::Sum:
      out = xpn_add(expand(e->left(), kind, cache), expand(e->right(), kind, cache));
      break;
    case ExprKind::LeftWeight:
      out = xpn_lmul(e->weight(), expand(e->left(), kind, cache));
      break;
    case ExprKind::RightWeight:
      out = xpn_rmul(expand(e->left(), kind, cache), e->weight());
      break;
    case ExprKind::Prod: {
      Expansion x = expand(e->left(), kind, cache);
      Weight c = x.constant();
      x.set_constant(Weight::zero(kind));
      out = xpn_rmul_expr(x, e->right());
      // d(F) is needed only when c(E) is nonzero.
      if (!c.is_zero())
        out = xpn_add(out, xpn_lmul(c, expand(e->right(), kind, cache)));
      break;
    }
    case ExprKind::Star: {
      Expansion x = expand(e->left(), kind, cache);
      Weight c = x.constant();
      if (!starrable(c)) throw NonStarrableError(print_expression(e));
      Weight s = star(c);
      x.set_constant(Weight::zero(kind));
      out = xpn_lmul(s, xpn_rmul_expr(x, e));  // the input node is reused
      out.set_constant(s);
      break;
    }
    case ExprKind::Tuple:
      out = xpn_tuple(expand(e->left(), kind, cache), expand(e->right(), kind, cache));
      break;
  }
  cache.emplace(e, out);
  return out;
}

}  // namespace

Expansion expansion_of(const ExprPtr& e, SemiringKind kind, ExpansionCache& cache) {
  return expand(e, kind, cache);
}

Expansion expansion_of(const ExprPtr& e, SemiringKind kind) {
  ExpansionCache cache;
  return expand(e, kind, cache);
}

std::string print_expansion(const Expansion& x, bool ascii) {
  const char* oplus = ascii ? " (+) " : " ⊕ ";
  const char* odot = ascii ? "(.)" : "⊙";
  std::string out;
  if (!x.constant().is_zero() || x.terms().empty())
    out = "<" + x.constant().to_string() + ">";
  for (const auto& [a, p] : x.terms()) {
    if (!out.empty()) out += oplus;
    out += a.to_string();
    out += odot;
    out += '[';
    out += print_polynomial(p, ascii);
    out += ']';
  }
  return out;
}

}  // namespace mre
