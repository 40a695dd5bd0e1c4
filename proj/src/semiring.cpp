#include "wfadis/semiring.hpp"

#include <charconv>

#include "wfadis/errors.hpp"

namespace wfadis {
namespace {

void CheckSameKind(const Weight &x, const Weight &y, const char *op) {
  if (x.kind() != y.kind()) {
    throw UsageError(std::string(op) + ": semiring kind mismatch (" +
                     std::string(KindName(x.kind())) + " vs " +
                     std::string(KindName(y.kind())) + ")");
  }
}

bool ParseInteger(std::string_view text, boost::multiprecision::cpp_int *out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  *out = boost::multiprecision::cpp_int(digits);
  return true;
}

// Integer fast paths: boost::rational normalizes (gcd) on every operation and
// compares through continued fractions, which dominates subset constructions
// whose weights are all integers.
// Numerator and denominator by reference (the free functions copy).
const boost::multiprecision::cpp_int &Num(const Rational &r) {
  return r.backend().data().numerator();
}
const boost::multiprecision::cpp_int &Den(const Rational &r) {
  return r.backend().data().denominator();
}

bool IsInteger(const Rational &r) {
  const auto &d = Den(r).backend();
  return d.size() == 1 && *d.limbs() == 1;
}

Rational Add(const Rational &a, const Rational &b) {
  if (IsInteger(a) && IsInteger(b)) {
    return Rational(boost::multiprecision::cpp_int(Num(a) + Num(b)));
  }
  return a + b;
}

Rational Subtract(const Rational &a, const Rational &b) {
  if (IsInteger(a) && IsInteger(b)) {
    return Rational(boost::multiprecision::cpp_int(Num(a) - Num(b)));
  }
  return a - b;
}

int Compare(const Rational &a, const Rational &b) {
  if (IsInteger(a) && IsInteger(b)) {
    return Num(a).compare(Num(b));
  }
  return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace

std::string_view KindName(SemiringKind kind) {
  return kind == SemiringKind::kTropical ? "tropical" : "probability";
}

SemiringKind ParseKind(std::string_view name) {
  if (name == "tropical") return SemiringKind::kTropical;
  if (name == "probability") return SemiringKind::kProbability;
  throw UsageError("unknown semiring '" + std::string(name) + "'");
}

Weight Weight::Zero(SemiringKind kind) {
  if (kind == SemiringKind::kTropical) return Weight(kind, true, 0);
  return Weight(kind, false, 0);
}

Weight Weight::One(SemiringKind kind) {
  return Weight(kind, false, kind == SemiringKind::kTropical ? 0 : 1);
}

Weight Weight::Of(SemiringKind kind, const Rational &value) {
  if (kind == SemiringKind::kProbability && value.sign() < 0) {
    throw UsageError("probability weights must be non-negative, got " +
                     value.str());
  }
  return Weight(kind, false, value);
}

bool Weight::is_zero() const {
  return kind_ == SemiringKind::kTropical ? infinite_ : value_ == 0;
}

bool Weight::is_one() const {
  if (infinite_) return false;
  return kind_ == SemiringKind::kTropical ? value_ == 0 : value_ == 1;
}

std::strong_ordering operator<=>(const Weight &a, const Weight &b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.infinite_ != b.infinite_) {
    return a.infinite_ ? std::strong_ordering::greater
                       : std::strong_ordering::less;
  }
  int c = Compare(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Weight::ToString() const {
  if (infinite_) return "inf";
  // cpp_rational::str() already prints "p/q" in lowest terms, or "p".
  return value_.str();
}

Weight Plus(const Weight &x, const Weight &y) {
  CheckSameKind(x, y, "plus");
  if (x.kind() == SemiringKind::kTropical) {
    if (x.is_infinite()) return y;
    if (y.is_infinite()) return x;
    return Compare(x.value(), y.value()) <= 0 ? x : y;
  }
  return Weight::Of(x.kind(), Add(x.value(), y.value()));
}

Weight Times(const Weight &x, const Weight &y) {
  CheckSameKind(x, y, "times");
  if (x.kind() == SemiringKind::kTropical) {
    if (x.is_infinite()) return x;
    if (y.is_infinite()) return y;
    return Weight::Of(x.kind(), Add(x.value(), y.value()));
  }
  return Weight::Of(x.kind(), x.value() * y.value());
}

Weight Residual(const Weight &total, const Weight &part) {
  CheckSameKind(total, part, "residual");
  if (total.is_zero()) {
    throw DivisionByZero("residual: total is the semiring zero");
  }
  if (total.kind() == SemiringKind::kTropical) {
    if (part.is_infinite()) return part;
    return Weight::Of(total.kind(), Subtract(part.value(), total.value()));
  }
  return Weight::Of(total.kind(), part.value() / total.value());
}

Weight Negate(const Weight &x) {
  if (x.kind() != SemiringKind::kTropical) {
    throw UnsupportedOperation("negate is defined for tropical weights only");
  }
  if (x.is_infinite()) return x;
  return Weight::Of(x.kind(), -x.value());
}

Weight ParseWeight(SemiringKind kind, std::string_view text) {
  if (text == "inf" || text == "+inf") {
    if (kind != SemiringKind::kTropical) {
      throw UsageError("'inf' is only a tropical weight");
    }
    return Weight::Zero(kind);
  }
  boost::multiprecision::cpp_int num, den = 1;
  std::size_t slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? ParseInteger(text, &num)
                : ParseInteger(text.substr(0, slash), &num) &&
                      ParseInteger(text.substr(slash + 1), &den);
  if (!ok) throw UsageError("malformed weight '" + std::string(text) + "'");
  if (den <= 0) {
    throw UsageError("weight '" + std::string(text) +
                     "' needs a positive denominator");
  }
  return Weight::Of(kind, Rational(num, den));
}

}  // namespace wfadis
