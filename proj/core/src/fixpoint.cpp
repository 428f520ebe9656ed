#include "nlprog/fixpoint.hpp"

#include <random>

#include "nlprog/errors.hpp"

namespace nlprog {

namespace {

Interpretation random_subset(const SignatureRef& sig, std::mt19937_64& rng) {
  Interpretation result(sig);
  for (std::size_t i = 0; i < sig->size(); ++i) {
    if (rng() & 1) result.insert(i);
  }
  return result;
}

void spot_check_monotone(const InterpretationOp& op, const SignatureRef& sig) {
  // Fixed seed: the check is deterministic across runs.
  std::mt19937_64 rng(0x6d6f6e6f746f6eULL);
  constexpr int kSamples = 32;
  for (int s = 0; s < kSamples; ++s) {
    Interpretation smaller = random_subset(sig, rng);
    Interpretation larger = smaller.union_with(random_subset(sig, rng));
    if (!op(smaller).is_subset_of(op(larger))) {
      throw NonMonotoneError("operator is not monotone: found I subset of J with op(I) not subset of op(J)");
    }
  }
}

}  // namespace

Interpretation lfp(const InterpretationOp& op, const SignatureRef& sig,
                   bool check_monotone_hint) {
  if (check_monotone_hint) spot_check_monotone(op, sig);
  Interpretation current(sig);
  // A strictly growing chain repeats after at most |universe| + 1 applications.
  for (std::size_t step = 0; step <= sig->size() + 1; ++step) {
    Interpretation next = op(current);
    if (next == current) return current;
    if (!current.is_subset_of(next)) {
      throw NonMonotoneError(
          "operator is not monotone: the Kleene chain from the empty set shrank at step " +
          std::to_string(step + 1));
    }
    current = std::move(next);
  }
  throw NonMonotoneError("Kleene chain exceeded |universe| + 1 strict growth steps");
}

IterationTrace iterate(const InterpretationOp& op, Interpretation start,
                       std::size_t max_steps) {
  IterationTrace trace;
  trace.steps.push_back(std::move(start));
  for (std::size_t step = 0; step < max_steps; ++step) {
    Interpretation next = op(trace.steps.back());
    const bool repeated = next == trace.steps.back();
    trace.steps.push_back(std::move(next));
    if (repeated) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

std::vector<Interpretation> all_fixed_points(const InterpretationOp& op,
                                             const SignatureRef& sig, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(sig, cap, [&](const Interpretation& i) {
    if (op(i) == i) result.push_back(i);
  });
  return result;
}

}  // namespace nlprog
