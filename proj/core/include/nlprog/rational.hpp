#ifndef NLPROG_RATIONAL_HPP
#define NLPROG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <string>
#include <utility>

namespace nlprog {

/// Exact rational number. Arithmetic keeps the value in canonical form
/// (reduced fraction, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as "p" or "p/q" with q > 1.
std::string to_string(const Rational& value);

/// The value domain of thresholds and weighted body sums: the rationals
/// extended with negative infinity. Negative infinity is a distinct variant,
/// below every finite value; it is never encoded as a sentinel number.
class ExtendedRational {
public:
  ExtendedRational() : finite_(true), value_(0) {}
  ExtendedRational(Rational value) : finite_(true), value_(std::move(value)) {}
  ExtendedRational(int value) : finite_(true), value_(value) {}

  static ExtendedRational neg_infinity() { return ExtendedRational(NegInfTag{}); }

  bool is_finite() const { return finite_; }
  bool is_neg_infinity() const { return !finite_; }

  /// Finite value; must not be called on negative infinity.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  struct NegInfTag {};
  explicit ExtendedRational(NegInfTag) : finite_(false), value_(0) {}

  bool finite_;
  Rational value_;
};

/// Formats a finite value as to_string(Rational) and negative infinity as "-inf".
std::string to_string(const ExtendedRational& value);

struct WeightedTerm {
  Rational weight;
  bool active = false;
};

/// Weighted sum with the empty-sum convention: an empty term list yields
/// negative infinity, while a nonempty all-inactive list yields 0.
ExtendedRational weighted_sum(std::span<const WeightedTerm> terms);

}  // namespace nlprog

#endif  // NLPROG_RATIONAL_HPP
