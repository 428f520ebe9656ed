#include "nlprog/net_semantics.hpp"

#include <algorithm>
#include <utility>

#include "nlprog/errors.hpp"
#include "nlprog/fixpoint.hpp"

namespace nlprog {

namespace {

bool fires(const Net& net, std::size_t target, const Interpretation& interp) {
  const auto in = net.incoming(target);
  const ExtendedRational& theta = net.sig()->threshold(target);
  if (in.empty()) {
    return theta.is_neg_infinity();
  }
  Rational sum = 0;
  for (const Net::InEdge& e : in) {
    if (interp.test(e.source)) {
      sum += e.weight;
    }
  }
  return sum >= theta.value();
}

/// Least body sum over all interpretations between the bounds: positive
/// weights contribute only when forced by the lower bound, negative weights
/// whenever permitted by the upper bound.
Rational interval_min(const Net& net, std::size_t target, const ThreeInterpretation& bounds) {
  Rational sum = 0;
  for (const Net::InEdge& e : net.incoming(target)) {
    if (e.weight > 0 ? bounds.lower().test(e.source) : bounds.upper().test(e.source)) {
      sum += e.weight;
    }
  }
  return sum;
}

Rational interval_max(const Net& net, std::size_t target, const ThreeInterpretation& bounds) {
  Rational sum = 0;
  for (const Net::InEdge& e : net.incoming(target)) {
    if (e.weight > 0 ? bounds.upper().test(e.source) : bounds.lower().test(e.source)) {
      sum += e.weight;
    }
  }
  return sum;
}

bool has_cycle(const Net& net) {
  const std::size_t n = net.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (const Net::InEdge& e : net.incoming(t)) {
      out[e.source].push_back(t);
    }
  }
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) {
      continue;
    }
    mark[root] = Mark::Grey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out[node].size()) {
        const std::size_t succ = out[node][next++];
        if (mark[succ] == Mark::Grey) {
          return true;
        }
        if (mark[succ] == Mark::White) {
          mark[succ] = Mark::Grey;
          stack.emplace_back(succ, 0);
        }
      } else {
        mark[node] = Mark::Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

NetClassification classify(const Net& net) {
  NetClassification result;
  result.positive = true;
  result.ordinary = true;
  for (std::size_t t = 0; t < net.size(); ++t) {
    const auto in = net.incoming(t);
    for (const Net::InEdge& e : in) {
      if (e.weight <= 0) {
        result.positive = false;
      }
      if (e.weight != 1) {
        result.ordinary = false;
      }
    }
    if (!in.empty()) {
      const ExtendedRational& theta = net.sig()->threshold(t);
      if (theta.is_neg_infinity() || theta.value() != Rational(in.size())) {
        result.ordinary = false;
      }
    }
  }
  result.acyclic = !has_cycle(net);
  return result;
}

Interpretation t_n(const Net& net, const Interpretation& interp) {
  require_signature(interp, net.sig());
  Interpretation result(net.sig());
  for (std::size_t t = 0; t < net.size(); ++t) {
    if (fires(net, t, interp)) {
      result.insert(t);
    }
  }
  return result;
}

Interpretation least_model(const Net& net) {
  if (!classify(net).positive) {
    throw NotPositiveError("net is not positive");
  }
  return lfp([&net](const Interpretation& i) { return t_n(net, i); }, net.sig());
}

std::vector<Interpretation> models(const Net& net, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(net.sig(), cap, [&](const Interpretation& i) {
    if (t_n(net, i).is_subset_of(i)) {
      result.push_back(i);
    }
  });
  return result;
}

std::vector<Interpretation> supported_models(const Net& net, std::size_t cap) {
  return all_fixed_points([&net](const Interpretation& i) { return t_n(net, i); }, net.sig(), cap);
}

Interpretation fitting(const Net& net, const ThreeInterpretation& bounds) {
  require_signature(bounds.lower(), net.sig());
  Interpretation result(net.sig());
  for (std::size_t t = 0; t < net.size(); ++t) {
    if (net.incoming(t).empty()) {
      if (net.sig()->threshold(t).is_neg_infinity()) {
        result.insert(t);
      }
    } else if (interval_min(net, t, bounds) >= net.sig()->threshold(t).value()) {
      result.insert(t);
    }
  }
  return result;
}

std::optional<Interpretation> stable_revision(const Net& net, const Interpretation& interp) {
  require_signature(interp, net.sig());
  Interpretation current(net.sig());
  for (std::size_t step = 0; step <= net.size() + 1; ++step) {
    Interpretation next = fitting(net, ThreeInterpretation(current, interp));
    if (next == current) {
      return current;
    }
    if (!next.is_subset_of(interp)) {
      return std::nullopt;
    }
    current = std::move(next);
  }
  throw Error("stable revision failed to converge within the universe bound");
}

Interpretation phi_dagger(const Net& net, const Interpretation& interp) {
  std::optional<Interpretation> revised = stable_revision(net, interp);
  if (!revised) {
    throw IterationEscapedSublatticeError(
        "stable revision left the interval below " + interp.to_string() +
        "; the interpretation is not an answer set");
  }
  return *std::move(revised);
}

std::vector<Interpretation> answer_sets(const Net& net, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(net.sig(), cap, [&](const Interpretation& i) {
    std::optional<Interpretation> revised = stable_revision(net, i);
    if (revised && *revised == i) {
      result.push_back(i);
    }
  });
  return result;
}

ThreeInterpretation ultimate(const Net& net, const ThreeInterpretation& bounds) {
  require_signature(bounds.lower(), net.sig());
  Interpretation lower(net.sig());
  Interpretation upper(net.sig());
  for (std::size_t t = 0; t < net.size(); ++t) {
    if (net.incoming(t).empty()) {
      if (net.sig()->threshold(t).is_neg_infinity()) {
        lower.insert(t);
        upper.insert(t);
      }
      continue;
    }
    const Rational& theta = net.sig()->threshold(t).value();
    if (interval_min(net, t, bounds) >= theta) {
      lower.insert(t);
    }
    if (interval_max(net, t, bounds) >= theta) {
      upper.insert(t);
    }
  }
  return ThreeInterpretation(std::move(lower), std::move(upper));
}

std::vector<Interpretation> ultimate_answer_sets(const Net& net, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(net.sig(), cap, [&](const Interpretation& i) {
    Interpretation current(net.sig());
    for (std::size_t step = 0;; ++step) {
      if (step > net.size() + 1) {
        throw Error("ultimate revision failed to converge within the universe bound");
      }
      Interpretation next = ultimate(net, ThreeInterpretation(current, i)).lower();
      if (next == current) {
        if (current == i) {
          result.push_back(i);
        }
        break;
      }
      if (!next.is_subset_of(i)) {
        break;
      }
      current = std::move(next);
    }
  });
  return result;
}

LayeredNet LayeredNet::longest_path(const Net& net) {
  if (has_cycle(net)) {
    throw NotAcyclicError("net has a directed cycle; it cannot be layered");
  }
  const std::size_t n = net.size();
  std::vector<std::size_t> level(n, 0);
  // Longest path from the facts; processing order by repeated relaxation is
  // fine at these sizes, but a memoized descent keeps it linear.
  std::vector<char> done(n, 0);
  auto resolve = [&](auto&& self, std::size_t node) -> std::size_t {
    if (done[node]) {
      return level[node];
    }
    std::size_t best = 0;
    for (const Net::InEdge& e : net.incoming(node)) {
      best = std::max(best, self(self, e.source));
    }
    level[node] = best + 1;
    done[node] = 1;
    return level[node];
  };
  std::size_t depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    depth = std::max(depth, resolve(resolve, i));
  }
  std::vector<std::vector<std::size_t>> layers(depth);
  for (std::size_t i = 0; i < n; ++i) {
    layers[level[i] - 1].push_back(i);
  }
  return LayeredNet(net, std::move(layers));
}

LayeredNet LayeredNet::with_layers(const Net& net, std::vector<std::vector<std::size_t>> layers) {
  const std::size_t n = net.size();
  std::vector<std::size_t> level(n, 0);
  std::size_t seen = 0;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].empty()) {
      throw ValidationError("layer " + std::to_string(l + 1) + " is empty");
    }
    for (std::size_t node : layers[l]) {
      if (node >= n) {
        throw ValidationError("layer member out of range");
      }
      if (level[node] != 0) {
        throw ValidationError("neuron '" + net.sig()->neuron(node).name() +
                              "' appears in more than one layer");
      }
      level[node] = l + 1;
      ++seen;
    }
  }
  if (seen != n) {
    throw ValidationError("layers do not cover the universe");
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (net.is_fact(t) != (level[t] == 1)) {
      throw ValidationError("layer 1 must consist exactly of the facts");
    }
    for (const Net::InEdge& e : net.incoming(t)) {
      if (level[e.source] >= level[t]) {
        throw ValidationError("edge from '" + net.sig()->neuron(e.source).name() + "' to '" +
                              net.sig()->neuron(t).name() +
                              "' does not go to a strictly higher layer");
      }
    }
  }
  return LayeredNet(net, std::move(layers));
}

Interpretation LayeredNet::layer(std::size_t level) const {
  if (level == 0 || level > layers_.size()) {
    throw ValidationError("layer index out of range");
  }
  Interpretation result(net_.sig());
  for (std::size_t node : layers_[level - 1]) {
    result.insert(node);
  }
  return result;
}

LayeredNet layers(const Net& net) { return LayeredNet::longest_path(net); }

Interpretation feed_forward(const LayeredNet& layered, const Interpretation& input) {
  const Net& net = layered.net();
  require_signature(input, net.sig());
  if (layered.depth() == 0) {
    return input;
  }
  if (!input.is_subset_of(layered.layer(1))) {
    throw InputOutsideInputLayerError("input activates neurons outside the input layer");
  }
  Interpretation active = input;
  for (std::size_t level = 2; level <= layered.depth(); ++level) {
    Interpretation fired(net.sig());
    for (std::size_t node : layered.layers()[level - 1]) {
      if (fires(net, node, active)) {
        fired.insert(node);
      }
    }
    active = active.union_with(fired);
  }
  return active.intersect_with(layered.layer(layered.depth()));
}

}  // namespace nlprog
