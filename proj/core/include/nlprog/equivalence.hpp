#ifndef NLPROG_EQUIVALENCE_HPP
#define NLPROG_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlprog/interpretation.hpp"
#include "nlprog/net.hpp"
#include "nlprog/program.hpp"

namespace nlprog {

enum class EquivalenceKind { Subsumption, Supported, Least, AnswerSet, Ultimate };

std::string to_string(EquivalenceKind kind);
std::optional<EquivalenceKind> parse_equivalence_kind(std::string_view name);

/// Either side of an equivalence check.
using Operand = std::variant<Net, Program>;

const SignatureRef& operand_sig(const Operand& op);

/// A counterexample, stated over the working signature of the comparison so
/// it can be re-evaluated: the two operands disagree at `point` (for interval
/// kinds, at the interval [point, upper]); lhs_value and rhs_value are their
/// values there, or the differing family members for family kinds.
struct EquivalenceWitness {
  std::string description;
  SignatureRef sig;
  std::optional<Interpretation> point;
  std::optional<Interpretation> upper;
  std::optional<Interpretation> lhs_value;
  std::optional<Interpretation> rhs_value;
};

struct EquivalenceVerdict {
  EquivalenceKind kind;
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

struct EquivalenceOptions {
  std::size_t cap = kDefaultEnumerationCap;
  /// Refuse operands with different universes instead of comparing over the
  /// sorted union (absent neurons never fire).
  bool strict_universe = false;
};

/// Decides one equivalence kind exhaustively over the working universe.
/// The least kind requires positive operands.
EquivalenceVerdict check(EquivalenceKind kind, const Operand& x, const Operand& y,
                         const EquivalenceOptions& opts = {});

/// All applicable kinds in implication order. The least kind is skipped with
/// a note when an operand is not positive.
struct LadderReport {
  std::vector<EquivalenceVerdict> verdicts;
  std::vector<std::string> notes;

  bool all_equivalent() const;
};

LadderReport implication_ladder(const Operand& x, const Operand& y,
                                const EquivalenceOptions& opts = {});

}  // namespace nlprog

#endif  // NLPROG_EQUIVALENCE_HPP
