#ifndef NLPROG_NET_HPP
#define NLPROG_NET_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/rational.hpp"
#include "nlprog/signature.hpp"

namespace nlprog {

/// A weighted edge; the weight is nonzero (zero means disconnected and is
/// represented by the absence of the edge).
struct Edge {
  std::size_t source;
  std::size_t target;
  Rational weight;

  friend bool operator==(const Edge& a, const Edge& b) = default;
};

/// A boolean neural net: a finite weighted digraph over a signature.
///
/// Construction validates the fact convention both ways: a neuron has an
/// empty body iff its threshold is negative infinity. A violation is a
/// construction error, never a silent fix.
class Net {
public:
  struct InEdge {
    std::size_t source;
    Rational weight;
  };

  static Net make(SignatureRef sig, const std::vector<Edge>& edges);

  /// Convenience for tests and generators: edges given by neuron names.
  static Net from_edges(SignatureRef sig,
                        const std::vector<std::tuple<std::string, std::string, Rational>>& edges);

  const SignatureRef& sig() const { return sig_; }
  std::size_t size() const { return sig_->size(); }

  /// Incoming weighted edges of a target neuron, sorted by source index.
  std::span<const InEdge> incoming(std::size_t target) const { return incoming_[target]; }

  /// The body of a neuron: sources of its nonzero-weight incoming edges.
  Interpretation body(std::size_t target) const;
  Interpretation body(std::string_view name) const;

  bool is_fact(std::size_t index) const { return incoming_[index].empty(); }

  /// The neurons with empty body (equivalently, threshold -inf).
  Interpretation facts() const;

  /// All edges in (source, target) index order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Net& a, const Net& b);

private:
  Net(SignatureRef sig, std::vector<std::vector<InEdge>> incoming)
      : sig_(std::move(sig)), incoming_(std::move(incoming)) {}

  SignatureRef sig_;
  std::vector<std::vector<InEdge>> incoming_;
};

}  // namespace nlprog

#endif  // NLPROG_NET_HPP
