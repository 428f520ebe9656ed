#ifndef NLPROG_PROGRAM_HPP
#define NLPROG_PROGRAM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/rational.hpp"
#include "nlprog/signature.hpp"

namespace nlprog {

/// One weighted body atom of a rule.
struct BodyAtom {
  std::size_t neuron;
  Rational weight;

  friend bool operator==(const BodyAtom&, const BodyAtom&) = default;
};

/// A rule h <- b1 : w1, ..., bk : wk. The body atoms are distinct and kept
/// sorted by neuron index. Weights are nonzero unless zero weights are
/// explicitly permitted at construction.
class NeuralRule {
public:
  NeuralRule(std::size_t head, std::vector<BodyAtom> body, bool permit_zero_weights = false);

  std::size_t head() const { return head_; }
  std::span<const BodyAtom> body() const { return body_; }
  bool is_fact() const { return body_.empty(); }

  /// The set of body atoms as neuron indices (weights ignored).
  Interpretation body_atoms(const SignatureRef& sig) const;

  friend bool operator==(const NeuralRule&, const NeuralRule&) = default;
  friend auto operator<=>(const NeuralRule& a, const NeuralRule& b) {
    if (auto cmp = a.head_ <=> b.head_; cmp != 0) {
      return cmp;
    }
    return compare_bodies(a.body_, b.body_);
  }

private:
  static std::strong_ordering compare_bodies(const std::vector<BodyAtom>& a,
                                             const std::vector<BodyAtom>& b);

  std::size_t head_;
  std::vector<BodyAtom> body_;
};

/// A neural logic program: a finite set of rules over a signature.
///
/// Validation: rule indices lie in the universe; a head with a fact rule has
/// no other rule and threshold -inf; a neuron with threshold -inf is the head
/// of a fact rule. Rules are stored sorted and deduplicated.
class Program {
public:
  static Program make(SignatureRef sig, std::vector<NeuralRule> rules);

  const SignatureRef& sig() const { return sig_; }
  std::size_t size() const { return sig_->size(); }
  std::span<const NeuralRule> rules() const { return rules_; }

  /// Rules with the given head, contiguous in the sorted rule list.
  std::span<const NeuralRule> rules_for(std::size_t head) const;

  /// Heads of fact rules.
  Interpretation facts() const;

  friend bool operator==(const Program& a, const Program& b) {
    return same_signature(a.sig_, b.sig_) && a.rules_ == b.rules_;
  }

private:
  Program(SignatureRef sig, std::vector<NeuralRule> rules)
      : sig_(std::move(sig)), rules_(std::move(rules)) {}

  SignatureRef sig_;
  std::vector<NeuralRule> rules_;
};

}  // namespace nlprog

#endif  // NLPROG_PROGRAM_HPP
