#include "nlprog/program_semantics.hpp"

#include <algorithm>
#include <utility>

#include "nlprog/errors.hpp"
#include "nlprog/fixpoint.hpp"
#include "nlprog/signature.hpp"

namespace nlprog {

namespace {

/// Sources of nonzero-weight body atoms across all rules per head.
std::vector<std::vector<std::size_t>> dependency_sources(const Program& prog) {
  const std::size_t n = prog.size();
  std::vector<std::vector<std::size_t>> sources(n);
  for (const NeuralRule& rule : prog.rules()) {
    for (const BodyAtom& atom : rule.body()) {
      if (atom.weight != 0) {
        sources[rule.head()].push_back(atom.neuron);
      }
    }
  }
  for (auto& s : sources) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sources;
}

bool has_dependency_cycle(const Program& prog) {
  const auto sources = dependency_sources(prog);
  const std::size_t n = prog.size();
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  auto visit = [&](auto&& self, std::size_t node) -> bool {
    mark[node] = Mark::Grey;
    for (std::size_t src : sources[node]) {
      if (mark[src] == Mark::Grey) {
        return true;
      }
      if (mark[src] == Mark::White && self(self, src)) {
        return true;
      }
    }
    mark[node] = Mark::Black;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (mark[i] == Mark::White && visit(visit, i)) {
      return true;
    }
  }
  return false;
}

Rational rule_interval_min(const NeuralRule& rule, const ThreeInterpretation& bounds) {
  Rational sum = 0;
  for (const BodyAtom& atom : rule.body()) {
    if (atom.weight > 0 ? bounds.lower().test(atom.neuron) : bounds.upper().test(atom.neuron)) {
      sum += atom.weight;
    }
  }
  return sum;
}

bool rule_fires_between(const Program& prog, const NeuralRule& rule,
                        const ThreeInterpretation& bounds) {
  if (rule.is_fact()) {
    return true;
  }
  return rule_interval_min(rule, bounds) >= prog.sig()->threshold(rule.head()).value();
}

}  // namespace

ProgramClassification classify(const Program& prog) {
  ProgramClassification result;
  result.positive = true;
  result.ordinary = true;
  std::vector<char> head_seen(prog.size(), 0);
  result.minimalist = true;
  for (const NeuralRule& rule : prog.rules()) {
    if (head_seen[rule.head()]) {
      result.minimalist = false;
    }
    head_seen[rule.head()] = 1;
    for (const BodyAtom& atom : rule.body()) {
      if (atom.weight < 0) {
        result.positive = false;
      }
      if (atom.weight != 1) {
        result.ordinary = false;
      }
    }
    if (!rule.is_fact()) {
      const ExtendedRational& theta = prog.sig()->threshold(rule.head());
      if (theta.is_neg_infinity() || theta.value() != Rational(rule.body().size())) {
        result.ordinary = false;
      }
    }
  }
  result.acyclic = !has_dependency_cycle(prog);
  return result;
}

bool rule_fires(const Program& prog, const NeuralRule& rule, const Interpretation& interp) {
  if (rule.is_fact()) {
    return true;
  }
  Rational sum = 0;
  for (const BodyAtom& atom : rule.body()) {
    if (interp.test(atom.neuron)) {
      sum += atom.weight;
    }
  }
  return sum >= prog.sig()->threshold(rule.head()).value();
}

bool satisfies(const Program& prog, const Interpretation& interp, const NeuralRule& rule) {
  return !rule_fires(prog, rule, interp) || interp.test(rule.head());
}

bool satisfies(const Program& prog, const Interpretation& interp) {
  require_signature(interp, prog.sig());
  for (const NeuralRule& rule : prog.rules()) {
    if (!satisfies(prog, interp, rule)) {
      return false;
    }
  }
  return true;
}

Interpretation t_p(const Program& prog, const Interpretation& interp) {
  require_signature(interp, prog.sig());
  Interpretation result(prog.sig());
  for (const NeuralRule& rule : prog.rules()) {
    if (!result.test(rule.head()) && rule_fires(prog, rule, interp)) {
      result.insert(rule.head());
    }
  }
  return result;
}

Interpretation t_p_classical(const Program& prog, const Interpretation& interp) {
  require_signature(interp, prog.sig());
  Interpretation result(prog.sig());
  for (const NeuralRule& rule : prog.rules()) {
    if (result.test(rule.head())) {
      continue;
    }
    bool all_in = true;
    for (const BodyAtom& atom : rule.body()) {
      if (!interp.test(atom.neuron)) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      result.insert(rule.head());
    }
  }
  return result;
}

Interpretation least_model_p(const Program& prog) {
  if (!classify(prog).positive) {
    throw NotPositiveError("program is not positive");
  }
  return lfp([&prog](const Interpretation& i) { return t_p(prog, i); }, prog.sig());
}

std::vector<Interpretation> models_p(const Program& prog, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(prog.sig(), cap, [&](const Interpretation& i) {
    if (satisfies(prog, i)) {
      result.push_back(i);
    }
  });
  return result;
}

std::vector<Interpretation> supported_models_p(const Program& prog, std::size_t cap) {
  return all_fixed_points([&prog](const Interpretation& i) { return t_p(prog, i); }, prog.sig(),
                          cap);
}

Interpretation fitting_p(const Program& prog, const ThreeInterpretation& bounds) {
  require_signature(bounds.lower(), prog.sig());
  Interpretation result(prog.sig());
  for (const NeuralRule& rule : prog.rules()) {
    if (!result.test(rule.head()) && rule_fires_between(prog, rule, bounds)) {
      result.insert(rule.head());
    }
  }
  return result;
}

std::optional<Interpretation> stable_revision_p(const Program& prog,
                                                const Interpretation& interp) {
  require_signature(interp, prog.sig());
  Interpretation current(prog.sig());
  for (std::size_t step = 0; step <= prog.size() + 1; ++step) {
    Interpretation next = fitting_p(prog, ThreeInterpretation(current, interp));
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

Interpretation phi_dagger_p(const Program& prog, const Interpretation& interp) {
  std::optional<Interpretation> revised = stable_revision_p(prog, interp);
  if (!revised) {
    throw IterationEscapedSublatticeError(
        "stable revision left the interval below " + interp.to_string() +
        "; the interpretation is not an answer set");
  }
  return *std::move(revised);
}

std::vector<Interpretation> answer_sets_p(const Program& prog, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(prog.sig(), cap, [&](const Interpretation& i) {
    std::optional<Interpretation> revised = stable_revision_p(prog, i);
    if (revised && *revised == i) {
      result.push_back(i);
    }
  });
  return result;
}

ThreeInterpretation ultimate_p(const Program& prog, const ThreeInterpretation& bounds,
                               std::size_t gap_cap) {
  require_signature(bounds.lower(), prog.sig());
  const Interpretation gap = bounds.upper().minus(bounds.lower());
  const std::vector<std::size_t> gap_members = gap.member_indices();
  if (gap_members.size() > gap_cap) {
    throw CapExceededError(gap_members.size(), gap_cap);
  }
  Interpretation lower = Interpretation::full(prog.sig());
  Interpretation upper(prog.sig());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << gap_members.size()); ++mask) {
    Interpretation k = bounds.lower();
    for (std::size_t bit = 0; bit < gap_members.size(); ++bit) {
      if (mask & (std::uint64_t(1) << bit)) {
        k.insert(gap_members[bit]);
      }
    }
    Interpretation step = t_p(prog, k);
    lower = lower.intersect_with(step);
    upper = upper.union_with(step);
  }
  return ThreeInterpretation(std::move(lower), std::move(upper));
}

std::vector<Interpretation> ultimate_answer_sets_p(const Program& prog, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(prog.sig(), cap, [&](const Interpretation& i) {
    Interpretation current(prog.sig());
    for (std::size_t step = 0;; ++step) {
      if (step > prog.size() + 1) {
        throw Error("ultimate revision failed to converge within the universe bound");
      }
      Interpretation next = ultimate_p(prog, ThreeInterpretation(current, i), prog.size()).lower();
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

Program flp_reduct(const Program& prog, const Interpretation& interp) {
  require_signature(interp, prog.sig());
  std::vector<NeuralRule> kept;
  for (const NeuralRule& rule : prog.rules()) {
    bool atoms_in = true;
    for (const BodyAtom& atom : rule.body()) {
      if (!interp.test(atom.neuron)) {
        atoms_in = false;
        break;
      }
    }
    if (atoms_in) {
      kept.push_back(rule);
    }
  }
  return Program::make(prog.sig(), std::move(kept));
}

std::vector<Interpretation> flp_answer_sets(const Program& prog, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(prog.sig(), cap, [&](const Interpretation& i) {
    const Program reduct = flp_reduct(prog, i);
    if (!satisfies(reduct, i)) {
      return;
    }
    const std::vector<std::size_t> members = i.member_indices();
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << members.size()); ++mask) {
      Interpretation sub(prog.sig());
      for (std::size_t bit = 0; bit < members.size(); ++bit) {
        if (mask & (std::uint64_t(1) << bit)) {
          sub.insert(members[bit]);
        }
      }
      if (satisfies(reduct, sub)) {
        return;
      }
    }
    result.push_back(i);
  });
  return result;
}

Net dependency_graph(const Program& prog) {
  std::vector<char> head_seen(prog.size(), 0);
  for (const NeuralRule& rule : prog.rules()) {
    if (head_seen[rule.head()]) {
      throw NotMinimalistError(prog.sig()->neuron(rule.head()).name());
    }
    head_seen[rule.head()] = 1;
  }

  std::vector<char> occurs(prog.size(), 0);
  for (const NeuralRule& rule : prog.rules()) {
    occurs[rule.head()] = 1;
    for (const BodyAtom& atom : rule.body()) {
      occurs[atom.neuron] = 1;
    }
  }

  SignatureRef sig = prog.sig();
  std::vector<std::size_t> to_net(prog.size());
  bool all_occur = std::all_of(occurs.begin(), occurs.end(), [](char c) { return c != 0; });
  if (all_occur) {
    for (std::size_t i = 0; i < prog.size(); ++i) {
      to_net[i] = i;
    }
  } else {
    SignatureBuilder builder;
    std::size_t next = 0;
    for (std::size_t i = 0; i < prog.size(); ++i) {
      if (occurs[i]) {
        builder.add(prog.sig()->neuron(i), prog.sig()->threshold(i));
        to_net[i] = next++;
      }
    }
    sig = builder.build();
  }

  std::vector<Edge> edges;
  for (const NeuralRule& rule : prog.rules()) {
    for (const BodyAtom& atom : rule.body()) {
      if (atom.weight != 0) {
        edges.push_back(Edge{to_net[atom.neuron], to_net[rule.head()], atom.weight});
      }
    }
  }
  return Net::make(std::move(sig), edges);
}

std::vector<std::vector<std::size_t>> program_layers(const Program& prog) {
  if (has_dependency_cycle(prog)) {
    throw NotAcyclicError("program has a cyclic dependency; it cannot be layered");
  }
  const auto sources = dependency_sources(prog);
  const std::size_t n = prog.size();
  std::vector<std::size_t> level(n, 0);
  std::vector<char> done(n, 0);
  auto resolve = [&](auto&& self, std::size_t node) -> std::size_t {
    if (done[node]) {
      return level[node];
    }
    std::size_t best = 0;
    for (std::size_t src : sources[node]) {
      best = std::max(best, self(self, src));
    }
    level[node] = best + 1;
    done[node] = 1;
    return level[node];
  };
  std::size_t depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    depth = std::max(depth, resolve(resolve, i));
  }
  std::vector<std::vector<std::size_t>> result(depth);
  for (std::size_t i = 0; i < n; ++i) {
    result[level[i] - 1].push_back(i);
  }
  return result;
}

}  // namespace nlprog
