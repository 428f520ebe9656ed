#include "nlprog/rational.hpp"

#include "nlprog/errors.hpp"

namespace nlprog {

std::string to_string(const Rational& value) {
  return value.str();
}

const Rational& ExtendedRational::value() const {
  if (!finite_) throw Error("negative infinity has no finite value");
  return value_;
}

std::string to_string(const ExtendedRational& value) {
  return value.is_finite() ? to_string(value.value()) : std::string("-inf");
}

ExtendedRational weighted_sum(std::span<const WeightedTerm> terms) {
  if (terms.empty()) return ExtendedRational::neg_infinity();
  Rational sum = 0;
  for (const WeightedTerm& term : terms) {
    if (term.active) sum += term.weight;
  }
  return ExtendedRational(std::move(sum));
}

}  // namespace nlprog
