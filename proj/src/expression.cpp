#include "mre/expression.hpp"

#include "mre/derivative.hpp"
#include "mre/errors.hpp"

namespace mre {

namespace {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

void check_same_arity(const ExprPtr& l, const ExprPtr& r, const char* op) {
  if (l->arity() != r->arity())
    throw ArityMismatchError(std::string(op) + " of expressions with " +
                             std::to_string(l->arity()) + " and " +
                             std::to_string(r->arity()) + " tapes");
}

}  // namespace

class ExprBuilder {
 public:
  static ExprPtr make(ExprKind kind, char letter, Weight weight, ExprPtr left,
                      ExprPtr right) {
    auto node = std::make_shared<Expr>(Expr());
    Expr& e = const_cast<Expr&>(*node);
    e.kind_ = kind;
    e.letter_ = letter;
    e.weight_ = weight;
    e.left_ = std::move(left);
    e.right_ = std::move(right);
    switch (kind) {
      case ExprKind::Zero:
      case ExprKind::One:
      case ExprKind::Atom:
        e.arity_ = 1;
        e.size_ = 1;
        break;
      case ExprKind::Star:
      case ExprKind::LeftWeight:
      case ExprKind::RightWeight:
        e.arity_ = e.left_->arity();
        e.size_ = 1 + e.left_->size();
        break;
      case ExprKind::Sum:
      case ExprKind::Prod:
        e.arity_ = e.left_->arity();
        e.size_ = 1 + e.left_->size() + e.right_->size();
        break;
      case ExprKind::Tuple:
        e.arity_ = e.left_->arity() + e.right_->arity();
        e.size_ = 1 + e.left_->size() + e.right_->size();
        break;
    }
    std::size_t h = static_cast<std::size_t>(kind) + 0x51ed2701u;
    if (kind == ExprKind::Atom) h = hash_mix(h, static_cast<std::size_t>(e.letter_));
    if (kind == ExprKind::LeftWeight || kind == ExprKind::RightWeight)
      h = hash_mix(h, e.weight_.hash());
    if (e.left_) h = hash_mix(h, e.left_->hash());
    if (e.right_) h = hash_mix(h, e.right_->hash());
    e.hash_ = h;
    return node;
  }
};

ExprPtr mk_zero() {
  static const ExprPtr zero =
      ExprBuilder::make(ExprKind::Zero, 0, Weight(), nullptr, nullptr);
  return zero;
}

ExprPtr mk_one() {
  static const ExprPtr one =
      ExprBuilder::make(ExprKind::One, 0, Weight(), nullptr, nullptr);
  return one;
}

ExprPtr mk_atom(char letter) {
  return ExprBuilder::make(ExprKind::Atom, letter, Weight(), nullptr, nullptr);
}

ExprPtr mk_sum(const ExprPtr& l, const ExprPtr& r) {
  check_same_arity(l, r, "sum");
  if (l->kind() == ExprKind::Zero) return r;  // 0+E => E
  if (r->kind() == ExprKind::Zero) return l;  // E+0 => E
  return ExprBuilder::make(ExprKind::Sum, 0, Weight(), l, r);
}

ExprPtr mk_prod(const ExprPtr& l, const ExprPtr& r) {
  check_same_arity(l, r, "product");
  if (l->kind() == ExprKind::Zero) return l;  // 0.E => 0
  if (r->kind() == ExprKind::Zero) return r;  // E.0 => 0
  if (l->kind() == ExprKind::One) return r;  // 1.E => E
  if (l->kind() == ExprKind::LeftWeight && l->left()->kind() == ExprKind::One)
    return mk_lweight(l->weight(), r);  // (<k>1).E => <k>E
  if (r->kind() == ExprKind::One) return l;  // E.1 => E
  if (r->kind() == ExprKind::LeftWeight && r->left()->kind() == ExprKind::One)
    return mk_rweight(l, r->weight());  // E.(<k>1) => E<k>
  return ExprBuilder::make(ExprKind::Prod, 0, Weight(), l, r);
}

ExprPtr mk_star(const ExprPtr& e) {
  if (e->kind() == ExprKind::Zero) return mk_one();  // 0* => 1
  return ExprBuilder::make(ExprKind::Star, 0, Weight(), e, nullptr);
}

ExprPtr mk_lweight(const Weight& k, const ExprPtr& e) {
  if (k.is_zero()) return zero_of(e->arity());  // <0>E => 0
  if (k.is_one()) return e;                     // <1>E => E
  if (e->kind() == ExprKind::Zero) return e;    // <k>0 => 0
  if (e->kind() == ExprKind::LeftWeight)        // <k><h>E => <kh>E
    return mk_lweight(mul(k, e->weight()), e->left());
  return ExprBuilder::make(ExprKind::LeftWeight, 0, k, e, nullptr);
}

ExprPtr mk_rweight(const ExprPtr& e, const Weight& k) {
  if (k.is_zero()) return zero_of(e->arity());  // E<0> => 0
  if (k.is_one()) return e;                     // E<1> => E
  if (e->kind() == ExprKind::Zero) return e;    // 0<k> => 0
  if (e->kind() == ExprKind::RightWeight)       // (E<h>)<k> => E<hk>
    return mk_rweight(e->left(), mul(e->weight(), k));
  if (e->kind() == ExprKind::LeftWeight)        // (<h>E)<k> => <h>(E<k>)
    return mk_lweight(e->weight(), mk_rweight(e->left(), k));
  if (is_label_like(*e)) return mk_lweight(k, e);  // l<k> => <k>l
  return ExprBuilder::make(ExprKind::RightWeight, 0, k, e, nullptr);
}

ExprPtr mk_tuple(const ExprPtr& l, const ExprPtr& r) {
  // (<k>?E)|(<h>?F) => <kh>(E|F)
  ExprPtr lc = l, rc = r;
  bool weighted = false;
  Weight k;
  if (lc->kind() == ExprKind::LeftWeight) {
    k = lc->weight();
    weighted = true;
    lc = lc->left();
  }
  if (rc->kind() == ExprKind::LeftWeight) {
    k = weighted ? mul(k, rc->weight()) : rc->weight();
    weighted = true;
    rc = rc->left();
  }
  ExprPtr node = ExprBuilder::make(ExprKind::Tuple, 0, Weight(), lc, rc);
  return weighted ? mk_lweight(k, node) : node;
}

ExprPtr unit_of(int arity) {
  ExprPtr e = mk_one();
  for (int i = 1; i < arity; ++i) e = mk_tuple(e, mk_one());
  return e;
}

ExprPtr zero_of(int arity) {
  ExprPtr e = mk_zero();
  for (int i = 1; i < arity; ++i) e = mk_tuple(e, mk_zero());
  return e;
}

ExprPtr label_expr(const GenLabel& label) {
  ExprPtr e;
  for (const auto& component : label.components) {
    ExprPtr leaf = component.empty() ? mk_one() : mk_atom(component[0]);
    e = e ? mk_tuple(e, leaf) : leaf;
  }
  return e;
}

bool is_label_like(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::One:
    case ExprKind::Atom:
      return true;
    case ExprKind::Tuple:
      return is_label_like(*e.left()) && is_label_like(*e.right());
    default:
      return false;
  }
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ExprKind::Zero:
    case ExprKind::One:
      return true;
    case ExprKind::Atom:
      return a->letter() == b->letter();
    case ExprKind::Star:
      return expr_equal(a->left(), b->left());
    case ExprKind::LeftWeight:
    case ExprKind::RightWeight:
      return a->weight() == b->weight() && expr_equal(a->left(), b->left());
    case ExprKind::Sum:
    case ExprKind::Prod:
    case ExprKind::Tuple:
      return expr_equal(a->left(), b->left()) && expr_equal(a->right(), b->right());
  }
  return false;
}

int expr_compare(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  switch (a->kind()) {
    case ExprKind::Zero:
    case ExprKind::One:
      return 0;
    case ExprKind::Atom:
      return a->letter() < b->letter() ? -1 : a->letter() > b->letter() ? 1 : 0;
    case ExprKind::Star:
      return expr_compare(a->left(), b->left());
    case ExprKind::LeftWeight: {
      int c = weight_compare(a->weight(), b->weight());
      return c ? c : expr_compare(a->left(), b->left());
    }
    case ExprKind::RightWeight: {
      int c = expr_compare(a->left(), b->left());
      return c ? c : weight_compare(a->weight(), b->weight());
    }
    case ExprKind::Sum:
    case ExprKind::Prod:
    case ExprKind::Tuple: {
      int c = expr_compare(a->left(), b->left());
      return c ? c : expr_compare(a->right(), b->right());
    }
  }
  return 0;
}

namespace {

// Binding strength: sum < tuple < juxtaposition < weights/star < leaves.
int level(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Sum: return 0;
    case ExprKind::Tuple: return 1;
    case ExprKind::Prod: return 2;
    case ExprKind::LeftWeight:
    case ExprKind::RightWeight:
    case ExprKind::Star: return 3;
    default: return 4;
  }
}

void print_rec(const Expr& e, int min_level, bool force_paren, std::string& out) {
  bool paren = force_paren || level(e) < min_level;
  if (paren) out += '(';
  switch (e.kind()) {
    case ExprKind::Zero:
      out += "\\z";
      break;
    case ExprKind::One:
      out += "\\e";
      break;
    case ExprKind::Atom:
      out += e.letter();
      break;
    case ExprKind::Sum:
      print_rec(*e.left(), 0, false, out);
      out += '+';
      print_rec(*e.right(), 1, false, out);
      break;
    case ExprKind::Tuple:
      print_rec(*e.left(), 1, false, out);
      out += '|';
      print_rec(*e.right(), 2, false, out);
      break;
    case ExprKind::Prod:
      print_rec(*e.left(), 2, false, out);
      // A bare <k>E on the right would re-parse as a postfix weight of the
      // left factor.
      print_rec(*e.right(), 3, e.right()->kind() == ExprKind::LeftWeight, out);
      break;
    case ExprKind::LeftWeight:
      out += '<';
      out += e.weight().to_string();
      out += '>';
      print_rec(*e.left(), 3, false, out);
      break;
    case ExprKind::RightWeight:
      print_rec(*e.left(), 3, false, out);
      out += '<';
      out += e.weight().to_string();
      out += '>';
      break;
    case ExprKind::Star:
      print_rec(*e.left(), 3, e.left()->kind() == ExprKind::LeftWeight, out);
      out += '*';
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print_expression(const ExprPtr& e) {
  std::string out;
  print_rec(*e, 0, false, out);
  return out;
}

namespace {

void widths_rec(const Expr& e, int offset, std::vector<int>& acc) {
  switch (e.kind()) {
    case ExprKind::Zero:
    case ExprKind::One:
      break;
    case ExprKind::Atom:
      acc[static_cast<std::size_t>(offset)] += 1;
      break;
    case ExprKind::Star:
    case ExprKind::LeftWeight:
    case ExprKind::RightWeight:
      widths_rec(*e.left(), offset, acc);
      break;
    case ExprKind::Sum:
    case ExprKind::Prod:
      widths_rec(*e.left(), offset, acc);
      widths_rec(*e.right(), offset, acc);
      break;
    case ExprKind::Tuple:
      widths_rec(*e.left(), offset, acc);
      widths_rec(*e.right(), offset + e.left()->arity(), acc);
      break;
  }
}

void check_letters(const Expr& e, int offset, const Context& ctx) {
  switch (e.kind()) {
    case ExprKind::Zero:
    case ExprKind::One:
      break;
    case ExprKind::Atom:
      if (!ctx.letter_on_tape(e.letter(), offset))
        throw UnknownLetterError(std::string("letter '") + e.letter() +
                                 "' is not in the alphabet of tape " +
                                 std::to_string(offset + 1));
      break;
    case ExprKind::LeftWeight:
    case ExprKind::RightWeight:
      if (e.weight().kind() != ctx.weights)
        throw Error("expression weight from a different semiring than the context");
      check_letters(*e.left(), offset, ctx);
      break;
    case ExprKind::Star:
      check_letters(*e.left(), offset, ctx);
      break;
    case ExprKind::Sum:
    case ExprKind::Prod:
      check_letters(*e.left(), offset, ctx);
      check_letters(*e.right(), offset, ctx);
      break;
    case ExprKind::Tuple:
      check_letters(*e.left(), offset, ctx);
      check_letters(*e.right(), offset + e.left()->arity(), ctx);
      break;
  }
}

}  // namespace

std::vector<int> widths(const ExprPtr& e) {
  std::vector<int> acc(static_cast<std::size_t>(e->arity()), 0);
  widths_rec(*e, 0, acc);
  return acc;
}

int width(const ExprPtr& e) {
  int total = 0;
  for (int w : widths(e)) total += w;
  return total;
}

int validate(const ExprPtr& e, const Context& ctx) {
  if (e->arity() != ctx.tape_count())
    throw TapeMismatchError("expression has " + std::to_string(e->arity()) +
                            " tape(s), context has " +
                            std::to_string(ctx.tape_count()));
  check_letters(*e, 0, ctx);
  // Computing the constant term visits every subterm and fails on the first
  // star whose operand's constant term is not starrable.
  constant_term(e, ctx.weights);
  return e->arity();
}

}  // namespace mre
