#include "nlprog/net.hpp"

#include <algorithm>
#include <utility>

#include "nlprog/errors.hpp"

namespace nlprog {

Net Net::make(SignatureRef sig, const std::vector<Edge>& edges) {
  if (!sig) {
    throw ValidationError("net requires a signature");
  }
  const std::size_t n = sig->size();
  std::vector<std::vector<InEdge>> incoming(n);
  for (const Edge& e : edges) {
    if (e.source >= n || e.target >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.weight == 0) {
      throw ValidationError("edge from '" + sig->neuron(e.source).name() + "' to '" +
                            sig->neuron(e.target).name() + "' has weight zero");
    }
    incoming[e.target].push_back(InEdge{e.source, e.weight});
  }
  for (std::size_t t = 0; t < n; ++t) {
    auto& in = incoming[t];
    std::sort(in.begin(), in.end(),
              [](const InEdge& a, const InEdge& b) { return a.source < b.source; });
    for (std::size_t i = 1; i < in.size(); ++i) {
      if (in[i - 1].source == in[i].source) {
        throw ValidationError("duplicate edge from '" + sig->neuron(in[i].source).name() +
                              "' to '" + sig->neuron(t).name() + "'");
      }
    }
    const bool fact_threshold = sig->threshold(t).is_neg_infinity();
    if (in.empty() && !fact_threshold) {
      throw ValidationError("neuron '" + sig->neuron(t).name() +
                            "' has an empty body but a finite threshold");
    }
    if (!in.empty() && fact_threshold) {
      throw ValidationError("neuron '" + sig->neuron(t).name() +
                            "' has a nonempty body but threshold -inf");
    }
  }
  return Net(std::move(sig), std::move(incoming));
}

Net Net::from_edges(SignatureRef sig,
                    const std::vector<std::tuple<std::string, std::string, Rational>>& edges) {
  if (!sig) {
    throw ValidationError("net requires a signature");
  }
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [source, target, weight] : edges) {
    resolved.push_back(Edge{sig->require(source), sig->require(target), weight});
  }
  return make(std::move(sig), resolved);
}

Interpretation Net::body(std::size_t target) const {
  Interpretation result(sig_);
  for (const InEdge& in : incoming_[target]) {
    result.insert(in.source);
  }
  return result;
}

Interpretation Net::body(std::string_view name) const { return body(sig_->require(name)); }

Interpretation Net::facts() const {
  Interpretation result(sig_);
  for (std::size_t i = 0; i < size(); ++i) {
    if (incoming_[i].empty()) {
      result.insert(i);
    }
  }
  return result;
}

std::vector<Edge> Net::edges() const {
  std::vector<Edge> result;
  for (std::size_t t = 0; t < size(); ++t) {
    for (const InEdge& in : incoming_[t]) {
      result.push_back(Edge{in.source, t, in.weight});
    }
  }
  std::sort(result.begin(), result.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  return result;
}

bool operator==(const Net& a, const Net& b) {
  if (!same_signature(a.sig_, b.sig_)) {
    return false;
  }
  for (std::size_t t = 0; t < a.size(); ++t) {
    const auto& lhs = a.incoming_[t];
    const auto& rhs = b.incoming_[t];
    if (lhs.size() != rhs.size()) {
      return false;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i].source != rhs[i].source || lhs[i].weight != rhs[i].weight) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace nlprog
