#ifndef NLPROG_FIXPOINT_HPP
#define NLPROG_FIXPOINT_HPP

#include <functional>
#include <vector>

#include "nlprog/interpretation.hpp"

namespace nlprog {

/// An operator on the powerset lattice of a fixed signature.
using InterpretationOp = std::function<Interpretation(const Interpretation&)>;

/// The recorded Kleene chain of an iteration; step 0 is the start value.
/// When converged, the last two entries are equal.
struct IterationTrace {
  std::vector<Interpretation> steps;
  bool converged = false;

  const Interpretation& last() const { return steps.back(); }
};

/// Least fixed point of a monotone operator by Kleene iteration from the
/// empty interpretation; reached in at most |universe| + 1 applications.
///
/// Monotonicity is the caller's responsibility. A chain step that fails to
/// grow the set proves non-monotonicity and raises NonMonotoneError; with
/// check_monotone_hint the operator is additionally spot-checked on a fixed
/// deterministic sample of subset pairs.
Interpretation lfp(const InterpretationOp& op, const SignatureRef& sig,
                   bool check_monotone_hint = false);

/// Applies op up to max_steps times, stopping early when a value repeats the
/// immediately preceding one. No monotonicity assumption.
IterationTrace iterate(const InterpretationOp& op, Interpretation start,
                       std::size_t max_steps);

/// All fixed points of op, by exhaustive enumeration of the powerset.
std::vector<Interpretation> all_fixed_points(const InterpretationOp& op,
                                             const SignatureRef& sig,
                                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace nlprog

#endif  // NLPROG_FIXPOINT_HPP
