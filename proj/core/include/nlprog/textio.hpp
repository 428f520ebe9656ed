#ifndef NLPROG_TEXTIO_HPP
#define NLPROG_TEXTIO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlprog/equivalence.hpp"
#include "nlprog/errors.hpp"
#include "nlprog/fixpoint.hpp"
#include "nlprog/net.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/oracle.hpp"
#include "nlprog/program.hpp"

namespace nlprog::textio {

struct SourceSpan {
  std::string file = "<input>";
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

enum class DiagnosticCategory { Lexical, Syntactic, Validation };

std::string to_string(DiagnosticCategory category);

struct Diagnostic {
  SourceSpan span;
  DiagnosticCategory category = DiagnosticCategory::Syntactic;
  std::string message;

  /// "file:line:column: category: message"
  std::string render() const;
};

/// Carries one diagnostic, or all of them when error collection is on.
class ParseError : public Error {
public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  const Diagnostic& first() const { return diagnostics_.front(); }

private:
  static std::string render_all(const std::vector<Diagnostic>& diagnostics);

  std::vector<Diagnostic> diagnostics_;
};

struct ParseOptions {
  std::string filename = "<input>";
  bool permit_zero_weights = false;
  /// Keep parsing after an error and report every diagnostic at once.
  bool collect_all_errors = false;
};

Program parse_program(std::string_view text, const ParseOptions& opts = {});
Net parse_net(std::string_view text, const ParseOptions& opts = {});

/// Canonical text forms; parsing the output reproduces the value exactly.
std::string serialize_program(const Program& prog);
std::string serialize_net(const Net& net);

/// JSON forms. Rationals are exact "p" or "p/q" strings, thresholds may be
/// "-inf", interpretations are lexicographically sorted name arrays.
std::string to_json(const Net& net);
std::string to_json(const Program& prog);
std::string to_json_interpretation(std::string_view kind, const Interpretation& interp);
std::string to_json_family(std::string_view kind, const SignatureRef& sig,
                           const std::vector<Interpretation>& family,
                           const std::vector<std::string>& notes = {});
std::string to_json_trace(const IterationTrace& trace);
std::string to_json_layers(const LayeredNet& layered);
std::string to_json_ladder(const LadderReport& report);
std::string to_json_verdict(const EquivalenceVerdict& verdict);
std::string to_json_experiment(const oracle::ExperimentReport& report);

}  // namespace nlprog::textio

#endif  // NLPROG_TEXTIO_HPP
