#ifndef NLPROG_TESTS_SUPPORT_HPP
#define NLPROG_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "nlprog/net.hpp"
#include "nlprog/program.hpp"
#include "nlprog/signature.hpp"

namespace nlprog::tests {

/// Three-neuron running example: a fact feeding b, b inhibiting c.
/// theta(b) = 1 and theta(c) = 0, so c fires exactly while b is off.
inline Net n1() {
  SignatureBuilder b;
  b.add("a", ExtendedRational::neg_infinity());
  b.add("b", ExtendedRational(1));
  b.add("c", ExtendedRational(0));
  return Net::from_edges(b.build(), {{"a", "b", 1}, {"b", "c", -1}});
}

/// Two-input XOR as a layered net: h1 is the OR gate, h2 the AND gate,
/// and z fires on OR minus AND.
inline Net xor_net() {
  SignatureBuilder b;
  b.add("x", ExtendedRational::neg_infinity());
  b.add("y", ExtendedRational::neg_infinity());
  b.add("h1", ExtendedRational(1));
  b.add("h2", ExtendedRational(2));
  b.add("z", ExtendedRational(1));
  return Net::from_edges(b.build(), {{"x", "h1", 1},
                                     {"y", "h1", 1},
                                     {"x", "h2", 1},
                                     {"y", "h2", 1},
                                     {"h1", "z", 1},
                                     {"h2", "z", Rational(-1)}});
}

/// Smallest program where the answer set and FLP answer set families differ:
/// {a, c} is stable but not a minimal model of its reduct.
inline Program divergent_program() {
  SignatureBuilder b;
  b.add("a", ExtendedRational(Rational(-1, 2)));
  b.add("b", ExtendedRational(0));
  b.add("c", ExtendedRational::neg_infinity());
  SignatureRef sig = b.build();
  std::vector<NeuralRule> rules;
  rules.emplace_back(sig->require("c"), std::vector<BodyAtom>{});
  rules.emplace_back(sig->require("a"),
                     std::vector<BodyAtom>{BodyAtom{sig->require("b"), Rational(-1)}});
  return Program::make(sig, std::move(rules));
}

inline Interpretation interp(const SignatureRef& sig, const std::vector<std::string>& names) {
  return Interpretation::from_names(sig, names);
}

}  // namespace nlprog::tests

#endif  // NLPROG_TESTS_SUPPORT_HPP
