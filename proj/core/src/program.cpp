#include "nlprog/program.hpp"

#include <algorithm>
#include <utility>

#include "nlprog/errors.hpp"

namespace nlprog {

NeuralRule::NeuralRule(std::size_t head, std::vector<BodyAtom> body, bool permit_zero_weights)
    : head_(head), body_(std::move(body)) {
  std::sort(body_.begin(), body_.end(),
            [](const BodyAtom& a, const BodyAtom& b) { return a.neuron < b.neuron; });
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (i > 0 && body_[i - 1].neuron == body_[i].neuron) {
      throw ValidationError("rule body mentions neuron index " +
                            std::to_string(body_[i].neuron) + " twice");
    }
    if (body_[i].weight == 0 && !permit_zero_weights) {
      throw ValidationError("rule body has a zero-weight atom (index " +
                            std::to_string(body_[i].neuron) + ")");
    }
  }
}

std::strong_ordering NeuralRule::compare_bodies(const std::vector<BodyAtom>& a,
                                                const std::vector<BodyAtom>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto cmp = a[i].neuron <=> b[i].neuron; cmp != 0) {
      return cmp;
    }
    if (a[i].weight != b[i].weight) {
      return a[i].weight < b[i].weight ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return a.size() <=> b.size();
}

Interpretation NeuralRule::body_atoms(const SignatureRef& sig) const {
  Interpretation result(sig);
  for (const BodyAtom& atom : body_) {
    result.insert(atom.neuron);
  }
  return result;
}

Program Program::make(SignatureRef sig, std::vector<NeuralRule> rules) {
  if (!sig) {
    throw ValidationError("program requires a signature");
  }
  const std::size_t n = sig->size();
  for (const NeuralRule& rule : rules) {
    if (rule.head() >= n) {
      throw ValidationError("rule head index out of range");
    }
    for (const BodyAtom& atom : rule.body()) {
      if (atom.neuron >= n) {
        throw ValidationError("rule body index out of range");
      }
    }
  }
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());

  std::vector<char> fact_head(n, 0);
  std::vector<char> rule_head(n, 0);
  for (const NeuralRule& rule : rules) {
    (rule.is_fact() ? fact_head : rule_head)[rule.head()] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = sig->neuron(i).name();
    if (fact_head[i] && rule_head[i]) {
      throw ValidationError("neuron '" + name + "' is both a fact and a rule head");
    }
    if (fact_head[i] && !sig->threshold(i).is_neg_infinity()) {
      throw ValidationError("fact '" + name + "' must have threshold -inf");
    }
    if (sig->threshold(i).is_neg_infinity() && !fact_head[i]) {
      throw ValidationError("neuron '" + name +
                            "' has threshold -inf but is not declared a fact");
    }
  }
  return Program(std::move(sig), std::move(rules));
}

std::span<const NeuralRule> Program::rules_for(std::size_t head) const {
  auto first = std::partition_point(rules_.begin(), rules_.end(),
                                    [head](const NeuralRule& r) { return r.head() < head; });
  auto last = std::partition_point(first, rules_.end(),
                                   [head](const NeuralRule& r) { return r.head() <= head; });
  return {first, last};
}

Interpretation Program::facts() const {
  Interpretation result(sig_);
  for (const NeuralRule& rule : rules_) {
    if (rule.is_fact()) {
      result.insert(rule.head());
    }
  }
  return result;
}

}  // namespace nlprog
