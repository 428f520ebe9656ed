#ifndef NLPROG_NET_SEMANTICS_HPP
#define NLPROG_NET_SEMANTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/net.hpp"

namespace nlprog {

struct NetClassification {
  bool positive = false;   // every edge weight is > 0
  bool ordinary = false;   // unit weights, threshold of each non-fact equals its body size
  bool acyclic = false;    // the edge relation has no directed cycle

  friend bool operator==(const NetClassification&, const NetClassification&) = default;
};

NetClassification classify(const Net& net);

/// One step of the net: fires every neuron whose weighted body sum under I
/// reaches its threshold. Facts (empty body, threshold -inf) always fire.
Interpretation t_n(const Net& net, const Interpretation& interp);

/// Least fixed point of t_n. Requires a positive net.
Interpretation least_model(const Net& net);

/// All prefixed points of t_n: interpretations I with t_n(I) subseteq I.
std::vector<Interpretation> models(const Net& net, std::size_t cap = kDefaultEnumerationCap);

/// All fixed points of t_n.
std::vector<Interpretation> supported_models(const Net& net,
                                             std::size_t cap = kDefaultEnumerationCap);

/// Fitting operator: fires a neuron iff its body sum reaches the threshold
/// under every interpretation between the bounds. Computed exactly via the
/// per-neuron interval minimum; no enumeration.
Interpretation fitting(const Net& net, const ThreeInterpretation& bounds);

/// Iterates J -> fitting(net, [J, interp]) from the empty interpretation.
/// Returns the fixed point, or nullopt when the iteration leaves the
/// sublattice below interp (in which case interp is not an answer set).
std::optional<Interpretation> stable_revision(const Net& net, const Interpretation& interp);

/// As stable_revision, but escaping the sublattice is an error.
Interpretation phi_dagger(const Net& net, const Interpretation& interp);

/// All interpretations equal to their own stable revision.
std::vector<Interpretation> answer_sets(const Net& net, std::size_t cap = kDefaultEnumerationCap);

/// Ultimate approximation of t_n on an interval: componentwise the
/// intersection and union of t_n over the interval, computed exactly via the
/// per-neuron interval minimum and maximum.
ThreeInterpretation ultimate(const Net& net, const ThreeInterpretation& bounds);

/// Answer sets under the ultimate approximation. For nets the lower component
/// of ultimate coincides with fitting, so these equal answer_sets.
std::vector<Interpretation> ultimate_answer_sets(const Net& net,
                                                 std::size_t cap = kDefaultEnumerationCap);

/// An acyclic net partitioned into layers: facts form layer 1 and every edge
/// goes from a strictly lower-indexed layer to a higher one.
class LayeredNet {
public:
  /// Canonical layering by longest path from the facts.
  static LayeredNet longest_path(const Net& net);

  /// Validates a caller-supplied layering of the same net.
  static LayeredNet with_layers(const Net& net, std::vector<std::vector<std::size_t>> layers);

  const Net& net() const { return net_; }
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }
  std::size_t depth() const { return layers_.size(); }

  /// Neurons of one layer as an interpretation (layers are 1-indexed).
  Interpretation layer(std::size_t level) const;

private:
  LayeredNet(Net net, std::vector<std::vector<std::size_t>> layers)
      : net_(std::move(net)), layers_(std::move(layers)) {}

  Net net_;
  std::vector<std::vector<std::size_t>> layers_;
};

/// Canonical layering of an acyclic net. Requires acyclicity.
LayeredNet layers(const Net& net);

/// Runs a layered net on an input activation of its first layer: the input
/// replaces the facts, later layers fire in order against everything
/// activated so far, and the result is the activation of the last layer.
Interpretation feed_forward(const LayeredNet& layered, const Interpretation& input);

}  // namespace nlprog

#endif  // NLPROG_NET_SEMANTICS_HPP
