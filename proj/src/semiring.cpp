#include "mre/semiring.hpp"

#include <cstdlib>
#include <numeric>

namespace mre {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

}  // namespace

SemiringKind semiring_from_token(const std::string& token) {
  if (token == "b") return SemiringKind::Boolean;
  if (token == "z") return SemiringKind::Integers;
  if (token == "q") return SemiringKind::Rationals;
  throw ContextError("unknown semiring token '" + token + "' (expected b, z or q)");
}

std::string semiring_token(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::Boolean: return "b";
    case SemiringKind::Integers: return "z";
    case SemiringKind::Rationals: return "q";
  }
  return "?";
}

Weight Weight::zero(SemiringKind kind) { return Weight(kind, 0, 1); }

Weight Weight::one(SemiringKind kind) { return Weight(kind, 1, 1); }

Weight Weight::boolean(bool value) {
  return Weight(SemiringKind::Boolean, value ? 1 : 0, 1);
}

Weight Weight::integer(std::int64_t value) {
  return Weight(SemiringKind::Integers, value, 1);
}

Weight Weight::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Weight(SemiringKind::Rationals, num, den);
}

Weight Weight::parse(SemiringKind kind, const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw Error("empty weight literal");
    std::size_t i = 0;
    char* end = nullptr;
    std::int64_t v = std::strtoll(s.c_str() + i, &end, 10);
    if (end != s.c_str() + s.size())
      throw Error("bad weight literal '" + s + "'");
    return v;
  };
  switch (kind) {
    case SemiringKind::Boolean:
      if (text == "0") return boolean(false);
      if (text == "1") return boolean(true);
      throw Error("bad Boolean weight '" + text + "' (expected 0 or 1)");
    case SemiringKind::Integers:
      return integer(parse_int(text));
    case SemiringKind::Rationals: {
      auto slash = text.find('/');
      if (slash == std::string::npos) return rational(parse_int(text), 1);
      return rational(parse_int(text.substr(0, slash)),
                      parse_int(text.substr(slash + 1)));
    }
  }
  throw Error("bad weight literal");
}

std::string Weight::to_string() const {
  if (kind_ == SemiringKind::Rationals && den_ != 1)
    return std::to_string(num_) + "/" + std::to_string(den_);
  return std::to_string(num_);
}

Weight add(const Weight& a, const Weight& b) {
  if (a.kind_ != b.kind_) throw Error("weights from different semirings");
  switch (a.kind_) {
    case SemiringKind::Boolean:
      return Weight::boolean(a.num_ != 0 || b.num_ != 0);
    case SemiringKind::Integers:
      return Weight::integer(a.num_ + b.num_);
    case SemiringKind::Rationals:
      return Weight::rational(a.num_ * b.den_ + b.num_ * a.den_,
                              a.den_ * b.den_);
  }
  throw Error("unreachable");
}

Weight mul(const Weight& a, const Weight& b) {
  if (a.kind_ != b.kind_) throw Error("weights from different semirings");
  switch (a.kind_) {
    case SemiringKind::Boolean:
      return Weight::boolean(a.num_ != 0 && b.num_ != 0);
    case SemiringKind::Integers:
      return Weight::integer(a.num_ * b.num_);
    case SemiringKind::Rationals: {
      // Cross-reduce before multiplying to keep magnitudes small.
      std::int64_t g1 = gcd64(a.num_, b.den_);
      std::int64_t g2 = gcd64(b.num_, a.den_);
      return Weight::rational((a.num_ / g1) * (b.num_ / g2),
                              (a.den_ / g2) * (b.den_ / g1));
    }
  }
  throw Error("unreachable");
}

bool starrable(const Weight& k) {
  switch (k.kind_) {
    case SemiringKind::Boolean: return true;
    case SemiringKind::Integers: return k.num_ == 0;
    case SemiringKind::Rationals: return !(k.num_ == 1 && k.den_ == 1);
  }
  return false;
}

Weight star(const Weight& k) {
  switch (k.kind_) {
    case SemiringKind::Boolean:
      return Weight::boolean(true);
    case SemiringKind::Integers:
      if (k.num_ == 0) return Weight::one(k.kind_);
      throw StarUndefinedError("star(" + k.to_string() + ") undefined in Z");
    case SemiringKind::Rationals:
      if (k.num_ == 1 && k.den_ == 1)
        throw StarUndefinedError("star(1) undefined in Q");
      // 1/(1-k) = den/(den-num)
      return Weight::rational(k.den_, k.den_ - k.num_);
  }
  throw Error("unreachable");
}

int weight_compare(const Weight& a, const Weight& b) {
  if (a.kind_ != b.kind_) throw Error("weights from different semirings");
  // num/den comparison; denominators are positive.
  std::int64_t lhs = a.num_ * b.den_;
  std::int64_t rhs = b.num_ * a.den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::size_t Weight::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_);
  h = h * 1000003u + std::hash<std::int64_t>()(num_);
  h = h * 1000003u + std::hash<std::int64_t>()(den_);
  return h;
}

}  // namespace mre
