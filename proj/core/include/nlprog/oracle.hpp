#ifndef NLPROG_ORACLE_HPP
#define NLPROG_ORACLE_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/net.hpp"
#include "nlprog/program.hpp"

namespace nlprog::oracle {

/// Inclusive range.
struct Range {
  std::size_t min = 0;
  std::size_t max = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

/// Parameters for random instances. All draws are taken from a deterministic
/// generator seeded from `seed`, so equal parameters give equal instances.
struct GenParams {
  Range neuron_count{2, 6};
  Range fact_count{1, 2};
  /// Probability of each candidate edge or body atom, in [0, 1].
  double density = 0.45;
  /// Probability that a drawn weight is negative, in [0, 1].
  double negative_fraction = 0.3;
  /// Weights are drawn as p/q with 1 <= p <= numerator_bound and
  /// 1 <= q <= denominator_bound, then possibly negated.
  std::int64_t numerator_bound = 3;
  std::int64_t denominator_bound = 2;
  std::uint64_t seed = 0;

  friend bool operator==(const GenParams&, const GenParams&) = default;
};

Net random_net(const GenParams& params);
Net random_ordinary_net(const GenParams& params);
Net random_acyclic_net(const GenParams& params);
Program random_program(const GenParams& params);

/// Definitional fitting oracle: intersects the one-step results over every
/// interpretation between the bounds. Exponential in the gap.
Interpretation brute_fitting(const Net& net, const ThreeInterpretation& bounds,
                             std::size_t gap_cap = kDefaultEnumerationCap);

/// Definitional program fitting oracle: a head fires iff some of its rules
/// reaches the threshold under every interpretation between the bounds.
Interpretation brute_fitting_p(const Program& prog, const ThreeInterpretation& bounds,
                               std::size_t gap_cap = kDefaultEnumerationCap);

/// Definitional ultimate oracle: componentwise intersection and union of the
/// one-step results over the interval.
ThreeInterpretation brute_ultimate(const Net& net, const ThreeInterpretation& bounds,
                                   std::size_t gap_cap = kDefaultEnumerationCap);

/// One random program whose answer sets are not all FLP answer sets.
struct Counterexample {
  Program program;
  Interpretation witness;
  std::uint64_t instance_seed = 0;
  std::size_t instance_index = 0;
};

struct ExperimentReport {
  GenParams params;
  std::size_t instances = 0;
  /// Instances where every answer set was also an FLP answer set.
  std::size_t agreeing_instances = 0;
  std::vector<Counterexample> counterexamples;
};

/// Compares answer sets against FLP answer sets over random programs. The
/// minimality check is double exponential, so universes are capped at 8.
ExperimentReport flp_experiment(const GenParams& params, std::size_t instance_count);

}  // namespace nlprog::oracle

#endif  // NLPROG_ORACLE_HPP
