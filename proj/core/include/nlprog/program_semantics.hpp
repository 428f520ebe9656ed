#ifndef NLPROG_PROGRAM_SEMANTICS_HPP
#define NLPROG_PROGRAM_SEMANTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/net.hpp"
#include "nlprog/program.hpp"

namespace nlprog {

struct ProgramClassification {
  bool positive = false;    // every body weight is >= 0
  bool ordinary = false;    // unit weights, threshold of each rule head equals its body size
  bool minimalist = false;  // at most one rule per head
  bool acyclic = false;     // the dependency relation has no directed cycle

  friend bool operator==(const ProgramClassification&, const ProgramClassification&) = default;
};

ProgramClassification classify(const Program& prog);

/// Whether the weighted body of the rule reaches the threshold of its head.
bool rule_fires(const Program& prog, const NeuralRule& rule, const Interpretation& interp);

/// Rule satisfaction: if the body fires then the head is in the interpretation.
bool satisfies(const Program& prog, const Interpretation& interp, const NeuralRule& rule);

/// Program satisfaction: every rule is satisfied.
bool satisfies(const Program& prog, const Interpretation& interp);

/// One step of the program: fires every head with a firing rule.
Interpretation t_p(const Program& prog, const Interpretation& interp);

/// The classical one-step operator that fires a rule iff its body atoms are
/// all in the interpretation, ignoring weights and thresholds. Coincides with
/// t_p on ordinary programs.
Interpretation t_p_classical(const Program& prog, const Interpretation& interp);

/// Least fixed point of t_p. Requires a positive program.
Interpretation least_model_p(const Program& prog);

std::vector<Interpretation> models_p(const Program& prog, std::size_t cap = kDefaultEnumerationCap);
std::vector<Interpretation> supported_models_p(const Program& prog,
                                               std::size_t cap = kDefaultEnumerationCap);

/// Fitting operator for programs: fires a head iff some rule for it reaches
/// the threshold under every interpretation between the bounds, via the
/// per-rule interval minimum.
Interpretation fitting_p(const Program& prog, const ThreeInterpretation& bounds);

std::optional<Interpretation> stable_revision_p(const Program& prog, const Interpretation& interp);
Interpretation phi_dagger_p(const Program& prog, const Interpretation& interp);
std::vector<Interpretation> answer_sets_p(const Program& prog,
                                          std::size_t cap = kDefaultEnumerationCap);

/// Ultimate approximation of t_p on an interval, computed by enumerating the
/// interval (exponential in the gap between the bounds).
ThreeInterpretation ultimate_p(const Program& prog, const ThreeInterpretation& bounds,
                               std::size_t gap_cap = kDefaultEnumerationCap);
std::vector<Interpretation> ultimate_answer_sets_p(const Program& prog,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// The reduct: rules whose body atom set is contained in the interpretation,
/// weights ignored.
Program flp_reduct(const Program& prog, const Interpretation& interp);

/// Interpretations that are subset-minimal models of their own reduct.
std::vector<Interpretation> flp_answer_sets(const Program& prog,
                                            std::size_t cap = kDefaultEnumerationCap);

/// The dependency graph of a minimalist program as a net: one edge per
/// nonzero-weight body atom, thresholds copied, restricted to the neurons
/// that occur in the program.
Net dependency_graph(const Program& prog);

/// Layers of an acyclic program by longest dependency path; neurons with no
/// nonzero-weight incoming dependency form layer 1.
std::vector<std::vector<std::size_t>> program_layers(const Program& prog);

}  // namespace nlprog

#endif  // NLPROG_PROGRAM_SEMANTICS_HPP
