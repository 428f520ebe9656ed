#include "nlprog/equivalence.hpp"

#include <algorithm>
#include <utility>

#include "nlprog/errors.hpp"
#include "nlprog/fixpoint.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/program_semantics.hpp"

namespace nlprog {

std::string to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::Subsumption:
      return "subsumption";
    case EquivalenceKind::Supported:
      return "supported";
    case EquivalenceKind::Least:
      return "least";
    case EquivalenceKind::AnswerSet:
      return "answerset";
    case EquivalenceKind::Ultimate:
      return "ultimate";
  }
  return "unknown";
}

std::optional<EquivalenceKind> parse_equivalence_kind(std::string_view name) {
  if (name == "subsumption") return EquivalenceKind::Subsumption;
  if (name == "supported") return EquivalenceKind::Supported;
  if (name == "least") return EquivalenceKind::Least;
  if (name == "answerset") return EquivalenceKind::AnswerSet;
  if (name == "ultimate") return EquivalenceKind::Ultimate;
  return std::nullopt;
}

const SignatureRef& operand_sig(const Operand& op) {
  return std::visit([](const auto& v) -> const SignatureRef& { return v.sig(); }, op);
}

namespace {

/// One operand evaluated over a working signature that may extend its own:
/// inputs are restricted to the operand's universe, outputs embedded back.
/// Neurons outside the operand's universe never fire.
class View {
public:
  View(const Operand& op, SignatureRef work) : op_(&op), work_(std::move(work)) {
    const SignatureRef& inner = operand_sig(*op_);
    inner_to_work_.reserve(inner->size());
    for (std::size_t j = 0; j < inner->size(); ++j) {
      inner_to_work_.push_back(work_->require(inner->neuron(j).name()));
    }
  }

  const SignatureRef& work() const { return work_; }

  bool positive() const {
    if (const Net* net = std::get_if<Net>(op_)) {
      return classify(*net).positive;
    }
    return classify(std::get<Program>(*op_)).positive;
  }

  Interpretation step(const Interpretation& interp) const {
    if (const Net* net = std::get_if<Net>(op_)) {
      return embed(t_n(*net, restrict(interp)));
    }
    return embed(t_p(std::get<Program>(*op_), restrict(interp)));
  }

  Interpretation fit(const Interpretation& lower, const Interpretation& upper) const {
    ThreeInterpretation bounds(restrict(lower), restrict(upper));
    if (const Net* net = std::get_if<Net>(op_)) {
      return embed(fitting(*net, bounds));
    }
    return embed(fitting_p(std::get<Program>(*op_), bounds));
  }

  ThreeInterpretation approx(const ThreeInterpretation& bounds, std::size_t gap_cap) const {
    ThreeInterpretation inner_bounds(restrict(bounds.lower()), restrict(bounds.upper()));
    ThreeInterpretation result = [&] {
      if (const Net* net = std::get_if<Net>(op_)) {
        return ultimate(*net, inner_bounds);
      }
      return ultimate_p(std::get<Program>(*op_), inner_bounds, gap_cap);
    }();
    return ThreeInterpretation(embed(result.lower()), embed(result.upper()));
  }

  std::optional<Interpretation> revise(const Interpretation& interp) const {
    Interpretation current(work_);
    for (std::size_t step = 0; step <= work_->size() + 1; ++step) {
      Interpretation next = fit(current, interp);
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

private:
  Interpretation restrict(const Interpretation& work_i) const {
    Interpretation result(operand_sig(*op_));
    for (std::size_t j = 0; j < inner_to_work_.size(); ++j) {
      if (work_i.test(inner_to_work_[j])) {
        result.insert(j);
      }
    }
    return result;
  }

  Interpretation embed(const Interpretation& inner_i) const {
    Interpretation result(work_);
    for (std::size_t j : inner_i.member_indices()) {
      result.insert(inner_to_work_[j]);
    }
    return result;
  }

  const Operand* op_;
  SignatureRef work_;
  std::vector<std::size_t> inner_to_work_;
};

SignatureRef working_signature(const Operand& x, const Operand& y,
                               const EquivalenceOptions& opts) {
  const SignatureRef& sx = operand_sig(x);
  const SignatureRef& sy = operand_sig(y);
  bool same_sequence = sx->size() == sy->size();
  if (same_sequence) {
    for (std::size_t i = 0; i < sx->size(); ++i) {
      if (sx->neuron(i).name() != sy->neuron(i).name()) {
        same_sequence = false;
        break;
      }
    }
  }
  if (same_sequence) {
    return sx;
  }
  if (opts.strict_universe) {
    throw SignatureMismatchError("operands have different universes");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sx->size(); ++i) {
    names.push_back(sx->neuron(i).name());
  }
  for (std::size_t i = 0; i < sy->size(); ++i) {
    names.push_back(sy->neuron(i).name());
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  SignatureBuilder builder;
  for (const std::string& name : names) {
    if (auto idx = sx->index_of(name)) {
      builder.add(name, sx->threshold(*idx));
    } else {
      builder.add(name, sy->threshold(*sy->index_of(name)));
    }
  }
  return builder.build();
}

std::vector<Interpretation> lifted_family(const View& view, EquivalenceKind kind,
                                          std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(view.work(), cap, [&](const Interpretation& i) {
    if (kind == EquivalenceKind::Supported) {
      if (view.step(i) == i) {
        result.push_back(i);
      }
    } else {
      std::optional<Interpretation> revised = view.revise(i);
      if (revised && *revised == i) {
        result.push_back(i);
      }
    }
  });
  return result;
}

/// First member of exactly one of two families collected in enumeration
/// order; returns (member, in_first).
std::pair<Interpretation, bool> first_difference(const std::vector<Interpretation>& a,
                                                 const std::vector<Interpretation>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i].bits() < b[j].bits()) {
      return {a[i], true};
    } else {
      return {b[j], false};
    }
  }
  if (i < a.size()) {
    return {a[i], true};
  }
  return {b[j], false};
}

EquivalenceVerdict check_subsumption(const View& vx, const View& vy,
                                     const EquivalenceOptions& opts) {
  EquivalenceVerdict verdict{EquivalenceKind::Subsumption, true, std::nullopt};
  for_each_interpretation(vx.work(), opts.cap, [&](const Interpretation& i) {
    if (verdict.witness) {
      return;
    }
    Interpretation lhs = vx.step(i);
    Interpretation rhs = vy.step(i);
    if (lhs != rhs) {
      verdict.equivalent = false;
      verdict.witness = EquivalenceWitness{
          "one-step operators differ at " + i.to_string(), vx.work(), i,
          std::nullopt,           std::move(lhs),           std::move(rhs)};
    }
  });
  return verdict;
}

EquivalenceVerdict check_family(EquivalenceKind kind, const View& vx, const View& vy,
                                const EquivalenceOptions& opts) {
  const std::vector<Interpretation> fx = lifted_family(vx, kind, opts.cap);
  const std::vector<Interpretation> fy = lifted_family(vy, kind, opts.cap);
  EquivalenceVerdict verdict{kind, fx == fy, std::nullopt};
  if (!verdict.equivalent) {
    auto [member, in_first] = first_difference(fx, fy);
    const std::string family =
        kind == EquivalenceKind::Supported ? "supported model" : "answer set";
    verdict.witness = EquivalenceWitness{
        family + " of the " + (in_first ? "first" : "second") + " operand only",
        vx.work(),
        member,
        std::nullopt,
        vx.step(member),
        vy.step(member)};
  }
  return verdict;
}

EquivalenceVerdict check_least(const View& vx, const View& vy) {
  if (!vx.positive() || !vy.positive()) {
    throw NotPositiveError("least-model equivalence requires positive operands");
  }
  Interpretation lx = lfp([&vx](const Interpretation& i) { return vx.step(i); }, vx.work());
  Interpretation ly = lfp([&vy](const Interpretation& i) { return vy.step(i); }, vy.work());
  EquivalenceVerdict verdict{EquivalenceKind::Least, lx == ly, std::nullopt};
  if (!verdict.equivalent) {
    verdict.witness =
        EquivalenceWitness{"least models differ", vx.work(),    std::nullopt,
                           std::nullopt,          std::move(lx), std::move(ly)};
  }
  return verdict;
}

EquivalenceVerdict check_ultimate(const View& vx, const View& vy,
                                  const EquivalenceOptions& opts) {
  EquivalenceVerdict verdict{EquivalenceKind::Ultimate, true, std::nullopt};
  for_each_three_interpretation(vx.work(), opts.cap, [&](const ThreeInterpretation& bounds) {
    if (verdict.witness) {
      return;
    }
    ThreeInterpretation lhs = vx.approx(bounds, opts.cap);
    ThreeInterpretation rhs = vy.approx(bounds, opts.cap);
    if (lhs.lower() != rhs.lower() || lhs.upper() != rhs.upper()) {
      const bool lower_differs = lhs.lower() != rhs.lower();
      verdict.equivalent = false;
      verdict.witness = EquivalenceWitness{
          std::string("ultimate ") + (lower_differs ? "lower" : "upper") +
              " components differ on [" + bounds.lower().to_string() + ", " +
              bounds.upper().to_string() + "]",
          vx.work(),
          bounds.lower(),
          bounds.upper(),
          lower_differs ? lhs.lower() : lhs.upper(),
          lower_differs ? rhs.lower() : rhs.upper()};
    }
  });
  return verdict;
}

}  // namespace

EquivalenceVerdict check(EquivalenceKind kind, const Operand& x, const Operand& y,
                         const EquivalenceOptions& opts) {
  SignatureRef work = working_signature(x, y, opts);
  View vx(x, work);
  View vy(y, work);
  switch (kind) {
    case EquivalenceKind::Subsumption:
      return check_subsumption(vx, vy, opts);
    case EquivalenceKind::Supported:
    case EquivalenceKind::AnswerSet:
      return check_family(kind, vx, vy, opts);
    case EquivalenceKind::Least:
      return check_least(vx, vy);
    case EquivalenceKind::Ultimate:
      return check_ultimate(vx, vy, opts);
  }
  throw Error("unknown equivalence kind");
}

bool LadderReport::all_equivalent() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const EquivalenceVerdict& v) { return v.equivalent; });
}

LadderReport implication_ladder(const Operand& x, const Operand& y,
                                const EquivalenceOptions& opts) {
  SignatureRef work = working_signature(x, y, opts);
  View vx(x, work);
  View vy(y, work);
  LadderReport report;
  report.verdicts.push_back(check_subsumption(vx, vy, opts));
  report.verdicts.push_back(check_family(EquivalenceKind::Supported, vx, vy, opts));
  if (vx.positive() && vy.positive()) {
    report.verdicts.push_back(check_least(vx, vy));
  } else {
    report.notes.push_back("least-model comparison skipped: an operand is not positive");
  }
  report.verdicts.push_back(check_family(EquivalenceKind::AnswerSet, vx, vy, opts));
  report.verdicts.push_back(check_ultimate(vx, vy, opts));
  return report;
}

}  // namespace nlprog
