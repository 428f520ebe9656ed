#include "nlprog/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "nlprog/errors.hpp"
#include "nlprog/program_semantics.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/signature.hpp"

namespace nlprog::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic and platform-independent; the standard distributions are
/// not specified bit-exactly, so draws are derived from the raw stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

  std::size_t in_range(const Range& r) { return r.min + below(r.max - r.min + 1); }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

private:
  std::uint64_t state_;
};

void validate_params(const GenParams& params) {
  if (params.neuron_count.min > params.neuron_count.max ||
      params.fact_count.min > params.fact_count.max) {
    throw InfeasibleParamsError("parameter range has min greater than max");
  }
  if (params.density < 0 || params.density > 1 || params.negative_fraction < 0 ||
      params.negative_fraction > 1) {
    throw InfeasibleParamsError("probabilities must lie in [0, 1]");
  }
  if (params.numerator_bound < 1 || params.denominator_bound < 1) {
    throw InfeasibleParamsError("weight bounds must be at least 1");
  }
}

std::string neuron_name(std::size_t index) {
  if (index < 26) {
    return std::string(1, static_cast<char>('a' + index));
  }
  return "n" + std::to_string(index);
}

Rational random_magnitude(Rng& rng, const GenParams& params) {
  return Rational(1 + rng.below(static_cast<std::size_t>(params.numerator_bound)),
                  1 + rng.below(static_cast<std::size_t>(params.denominator_bound)));
}

Rational random_weight(Rng& rng, const GenParams& params) {
  Rational w = random_magnitude(rng, params);
  return rng.chance(params.negative_fraction) ? -w : w;
}

struct Draw {
  std::size_t neurons = 0;
  std::vector<char> is_fact;
};

Draw draw_shape(Rng& rng, const GenParams& params, bool facts_as_prefix) {
  const std::size_t n = rng.in_range(params.neuron_count);
  if (params.fact_count.min > n) {
    throw InfeasibleParamsError("fact count exceeds the universe size");
  }
  std::size_t f = std::min(rng.in_range(params.fact_count), n);
  if (facts_as_prefix && n > 0 && f == 0) {
    throw InfeasibleParamsError("an acyclic net needs at least one fact");
  }
  Draw draw;
  draw.neurons = n;
  draw.is_fact.assign(n, 0);
  if (facts_as_prefix) {
    std::fill(draw.is_fact.begin(), draw.is_fact.begin() + f, 1);
  } else {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < f; ++i) {
      std::swap(order[i], order[i + rng.below(n - i)]);
      draw.is_fact[order[i]] = 1;
    }
  }
  return draw;
}

bool for_each_in_interval(const ThreeInterpretation& bounds, std::size_t gap_cap,
                          const std::function<bool(const Interpretation&)>& fn) {
  const std::vector<std::size_t> gap = bounds.upper().minus(bounds.lower()).member_indices();
  if (gap.size() > gap_cap) {
    throw CapExceededError(gap.size(), gap_cap);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << gap.size()); ++mask) {
    Interpretation k = bounds.lower();
    for (std::size_t bit = 0; bit < gap.size(); ++bit) {
      if (mask & (std::uint64_t(1) << bit)) {
        k.insert(gap[bit]);
      }
    }
    if (!fn(k)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Net random_net(const GenParams& params) {
  validate_params(params);
  Rng rng(params.seed);
  const Draw draw = draw_shape(rng, params, false);
  const std::size_t n = draw.neurons;

  std::vector<std::vector<Net::InEdge>> incoming(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (draw.is_fact[t]) {
      continue;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (rng.chance(params.density)) {
        incoming[t].push_back(Net::InEdge{s, random_weight(rng, params)});
      }
    }
    if (incoming[t].empty()) {
      incoming[t].push_back(Net::InEdge{rng.below(n), random_weight(rng, params)});
    }
  }

  SignatureBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    if (draw.is_fact[i]) {
      builder.add(neuron_name(i), ExtendedRational::neg_infinity());
    } else {
      builder.add(neuron_name(i), ExtendedRational(random_magnitude(rng, params)));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t t = 0; t < n; ++t) {
    for (const Net::InEdge& e : incoming[t]) {
      edges.push_back(Edge{e.source, t, e.weight});
    }
  }
  return Net::make(builder.build(), edges);
}

Net random_ordinary_net(const GenParams& params) {
  validate_params(params);
  Rng rng(params.seed);
  const Draw draw = draw_shape(rng, params, false);
  const std::size_t n = draw.neurons;

  std::vector<std::vector<std::size_t>> sources(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (draw.is_fact[t]) {
      continue;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (rng.chance(params.density)) {
        sources[t].push_back(s);
      }
    }
    if (sources[t].empty()) {
      sources[t].push_back(rng.below(n));
    }
  }

  SignatureBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    if (draw.is_fact[i]) {
      builder.add(neuron_name(i), ExtendedRational::neg_infinity());
    } else {
      builder.add(neuron_name(i), ExtendedRational(Rational(sources[i].size())));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s : sources[t]) {
      edges.push_back(Edge{s, t, 1});
    }
  }
  return Net::make(builder.build(), edges);
}

Net random_acyclic_net(const GenParams& params) {
  validate_params(params);
  Rng rng(params.seed);
  const Draw draw = draw_shape(rng, params, true);
  const std::size_t n = draw.neurons;

  std::vector<std::vector<Net::InEdge>> incoming(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (draw.is_fact[t]) {
      continue;
    }
    for (std::size_t s = 0; s < t; ++s) {
      if (rng.chance(params.density)) {
        incoming[t].push_back(Net::InEdge{s, random_weight(rng, params)});
      }
    }
    if (incoming[t].empty()) {
      incoming[t].push_back(Net::InEdge{rng.below(t), random_weight(rng, params)});
    }
  }

  SignatureBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    if (draw.is_fact[i]) {
      builder.add(neuron_name(i), ExtendedRational::neg_infinity());
    } else {
      builder.add(neuron_name(i), ExtendedRational(random_magnitude(rng, params)));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t t = 0; t < n; ++t) {
    for (const Net::InEdge& e : incoming[t]) {
      edges.push_back(Edge{e.source, t, e.weight});
    }
  }
  return Net::make(builder.build(), edges);
}

Program random_program(const GenParams& params) {
  validate_params(params);
  Rng rng(params.seed);
  const Draw draw = draw_shape(rng, params, false);
  const std::size_t n = draw.neurons;

  std::vector<std::vector<std::vector<BodyAtom>>> bodies(n);
  for (std::size_t h = 0; h < n; ++h) {
    if (draw.is_fact[h]) {
      continue;
    }
    std::size_t rule_count = rng.chance(0.15) ? 0 : 1 + (rng.chance(0.35) ? 1 : 0);
    for (std::size_t r = 0; r < rule_count; ++r) {
      std::vector<BodyAtom> body;
      for (std::size_t s = 0; s < n; ++s) {
        if (rng.chance(params.density)) {
          body.push_back(BodyAtom{s, random_weight(rng, params)});
        }
      }
      if (body.empty()) {
        body.push_back(BodyAtom{rng.below(n), random_weight(rng, params)});
      }
      bodies[h].push_back(std::move(body));
    }
  }

  SignatureBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    if (draw.is_fact[i]) {
      builder.add(neuron_name(i), ExtendedRational::neg_infinity());
      continue;
    }
    if (bodies[i].empty()) {
      builder.add(neuron_name(i), ExtendedRational(0));
      continue;
    }
    /// The threshold is the largest sum any one rule can reach, so a rule
    /// fires only with every positive atom active and every negative atom
    /// inactive. Lower thresholds would let all-positive rules fire from
    /// partially active bodies, which already separates the two answer set
    /// semantics; pinning the threshold keeps sign structure the sole source
    /// of disagreement.
    Rational theta = 0;
    for (const auto& body : bodies[i]) {
      Rational rhi = 0;
      for (const BodyAtom& atom : body) {
        if (atom.weight > 0) {
          rhi += atom.weight;
        }
      }
      theta = std::max(theta, rhi);
    }
    builder.add(neuron_name(i), ExtendedRational(theta));
  }

  SignatureRef sig = builder.build();
  std::vector<NeuralRule> rules;
  for (std::size_t h = 0; h < n; ++h) {
    if (draw.is_fact[h]) {
      rules.emplace_back(h, std::vector<BodyAtom>{});
      continue;
    }
    for (auto& body : bodies[h]) {
      rules.emplace_back(h, std::move(body));
    }
  }
  return Program::make(std::move(sig), std::move(rules));
}

Interpretation brute_fitting(const Net& net, const ThreeInterpretation& bounds,
                             std::size_t gap_cap) {
  Interpretation result = Interpretation::full(net.sig());
  for_each_in_interval(bounds, gap_cap, [&](const Interpretation& k) {
    result = result.intersect_with(t_n(net, k));
    return true;
  });
  return result;
}

Interpretation brute_fitting_p(const Program& prog, const ThreeInterpretation& bounds,
                               std::size_t gap_cap) {
  Interpretation result(prog.sig());
  for (const NeuralRule& rule : prog.rules()) {
    if (result.test(rule.head())) {
      continue;
    }
    const bool always = for_each_in_interval(bounds, gap_cap, [&](const Interpretation& k) {
      return rule_fires(prog, rule, k);
    });
    if (always) {
      result.insert(rule.head());
    }
  }
  return result;
}

ThreeInterpretation brute_ultimate(const Net& net, const ThreeInterpretation& bounds,
                                   std::size_t gap_cap) {
  Interpretation lower = Interpretation::full(net.sig());
  Interpretation upper(net.sig());
  for_each_in_interval(bounds, gap_cap, [&](const Interpretation& k) {
    Interpretation step = t_n(net, k);
    lower = lower.intersect_with(step);
    upper = upper.union_with(step);
    return true;
  });
  return ThreeInterpretation(std::move(lower), std::move(upper));
}

ExperimentReport flp_experiment(const GenParams& params, std::size_t instance_count) {
  validate_params(params);
  if (params.neuron_count.max > 8) {
    throw InfeasibleParamsError(
        "the minimality check is double exponential; cap the universe at 8 neurons");
  }
  ExperimentReport report;
  report.params = params;
  Rng seeds(params.seed);
  for (std::size_t i = 0; i < instance_count; ++i) {
    const std::uint64_t instance_seed = seeds.next();
    GenParams instance_params = params;
    instance_params.seed = instance_seed;
    const Program prog = random_program(instance_params);
    const std::vector<Interpretation> stable = answer_sets_p(prog, 8);
    const std::vector<Interpretation> flp = flp_answer_sets(prog, 8);
    ++report.instances;
    bool agree = true;
    for (const Interpretation& i_stable : stable) {
      if (std::find(flp.begin(), flp.end(), i_stable) == flp.end()) {
        agree = false;
        report.counterexamples.push_back(Counterexample{prog, i_stable, instance_seed, i});
        break;
      }
    }
    if (agree) {
      ++report.agreeing_instances;
    }
  }
  return report;
}

}  // namespace nlprog::oracle
