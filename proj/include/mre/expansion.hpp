#ifndef MRE_EXPANSION_HPP
#define MRE_EXPANSION_HPP

#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "mre/labels.hpp"
#include "mre/polynomial.hpp"

namespace mre {

// A one-step normal form of an expression: a constant term plus a map from
// generators (the firsts, never all-epsilon) to non-null polynomials.
class Expansion {
 public:
  Expansion(Weight constant, int arity)
      : constant_(std::move(constant)), arity_(arity) {}

  static Expansion null(SemiringKind kind, int arity) {
    return Expansion(Weight::zero(kind), arity);
  }

  const Weight& constant() const { return constant_; }
  void set_constant(const Weight& k) { constant_ = k; }
  int arity() const { return arity_; }

  const std::map<GenLabel, Polynomial>& terms() const { return terms_; }
  // The polynomial at a, null when a is not a first.
  const Polynomial& at(const GenLabel& a) const;
  bool is_proper() const { return constant_.is_zero(); }

  // Accumulates a polynomial onto a label; drops the entry when it cancels.
  void add_term(const GenLabel& a, const Polynomial& p);

  friend bool operator==(const Expansion& x, const Expansion& y);

 private:
  Weight constant_;
  std::map<GenLabel, Polynomial> terms_;
  int arity_;
};

Expansion xpn_add(const Expansion& x, const Expansion& y);
Expansion xpn_lmul(const Weight& k, const Expansion& x);
Expansion xpn_rmul(const Expansion& x, const Weight& k);
// X.E, defined for proper X only (throws NotProperError otherwise).
Expansion xpn_rmul_expr(const Expansion& x, const ExprPtr& e);
Expansion xpn_tuple(const Expansion& x, const Expansion& y);

// Projection back to an expression and the set of derived terms.
ExprPtr xpn_to_expr(const Expansion& x);
std::set<ExprPtr, ExprLess> xpn_terms(const Expansion& x);

// Memo table shared across the states of one automaton construction; keys
// are structural, so equal subterms are expanded once.
using ExpansionCache =
    std::unordered_map<ExprPtr, Expansion, ExprHash, ExprEq>;

// The expansion of an expression (structural recursion over the nine node
// kinds, with the product computing the right factor's expansion only when
// the left constant term is nonzero).
Expansion expansion_of(const ExprPtr& e, SemiringKind kind);
Expansion expansion_of(const ExprPtr& e, SemiringKind kind, ExpansionCache& cache);

// "<c> (+) a(.)[P] ..." in label order; the constant is omitted when zero
// unless the whole expansion is null.
std::string print_expansion(const Expansion& x, bool ascii = false);

}  // namespace mre

#endif
