#ifndef WFADIS_SEMIRING_HPP_
#define WFADIS_SEMIRING_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wfadis {

using Rational = boost::multiprecision::cpp_rational;

// The two supported semirings.
//   Tropical:    (Q u {+inf}, min, +, +inf, 0)
//   Probability: (Q>=0, +, *, 0, 1)
enum class SemiringKind : std::uint8_t { kTropical, kProbability };

std::string_view KindName(SemiringKind kind);
// Accepts "tropical" or "probability"; throws UsageError otherwise.
SemiringKind ParseKind(std::string_view name);

// An exact semiring element. Weights are immutable values; all arithmetic
// goes through the free functions below, which check that both operands
// belong to the same semiring.
class Weight {
 public:
  // Default: tropical one (0).
  Weight() = default;

  static Weight Zero(SemiringKind kind);
  static Weight One(SemiringKind kind);
  // Throws UsageError for a negative probability.
  static Weight Of(SemiringKind kind, const Rational &value);
  static Weight Of(SemiringKind kind, std::int64_t value) {
    return Of(kind, Rational(value));
  }

  SemiringKind kind() const { return kind_; }
  // Only tropical zero is infinite.
  bool is_infinite() const { return infinite_; }
  bool is_zero() const;
  bool is_one() const;
  // Undefined (returns 0) for infinite weights.
  const Rational &value() const { return value_; }

  // Structural identity; weights of different kinds never compare equal.
  friend bool operator==(const Weight &a, const Weight &b) {
    return a.kind_ == b.kind_ && a.infinite_ == b.infinite_ &&
           a.value_ == b.value_;
  }
  // Total order used for canonical sorting (kind, finite < inf, value).
  friend std::strong_ordering operator<=>(const Weight &a, const Weight &b);

  // Canonical text: "3", "-2", "5/2", "inf".
  std::string ToString() const;

 private:
  Weight(SemiringKind kind, bool infinite, Rational value)
      : kind_(kind), infinite_(infinite), value_(std::move(value)) {}

  SemiringKind kind_ = SemiringKind::kTropical;
  bool infinite_ = false;
  Rational value_ = 0;
};

// Semiring sum. Throws UsageError on kind mismatch.
Weight Plus(const Weight &x, const Weight &y);
// Semiring product. Throws UsageError on kind mismatch.
Weight Times(const Weight &x, const Weight &y);
// The z with total (x) z = part: tropical part - total, probability
// part / total. Throws DivisionByZero when total is the semiring zero.
Weight Residual(const Weight &total, const Weight &part);
// Tropical additive negation (inf stays inf). Throws UnsupportedOperation for
// the probability semiring.
Weight Negate(const Weight &x);

// Parses "3", "-2", "7/4", "inf". Rationals are reduced; a zero or negative
// denominator is rejected. Throws UsageError on malformed text.
Weight ParseWeight(SemiringKind kind, std::string_view text);

}  // namespace wfadis

#endif  // WFADIS_SEMIRING_HPP_
