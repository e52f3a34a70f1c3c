#ifndef MRE_DERIVATIVE_HPP
#define MRE_DERIVATIVE_HPP

#include "mre/expression.hpp"
#include "mre/labels.hpp"
#include "mre/polynomial.hpp"

namespace mre {

// The weight of the empty word in [[e]], computed syntactically.  Visits
// every subterm, so it doubles as the validity check for stars: a starred
// subterm whose constant term is not starrable raises NonStarrableError
// naming it.
Weight constant_term(const ExprPtr& e, SemiringKind kind);

// The partial derivative of e by a generator of matching arity.  Implemented
// by direct structural recursion, independently of expansions; the two
// agree (constant_term(e) with the expansion's constant, derivative(e, a)
// with the expansion's polynomial at a).
Polynomial derivative(const ExprPtr& e, const GenLabel& a, SemiringKind kind);

}  // namespace mre

#endif
