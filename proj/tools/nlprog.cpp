// nlprog: parse, evaluate and compare boolean neural nets (.nnet) and
// neural logic programs (.nlp).
//
// Exit codes: 0 success, 1 negative semantic result (not equivalent),
// 2 usage error, 3 parse or validation error, 4 enumeration cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nlprog/equivalence.hpp"
#include "nlprog/errors.hpp"
#include "nlprog/fixpoint.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/oracle.hpp"
#include "nlprog/program_semantics.hpp"
#include "nlprog/textio.hpp"
#include "nlprog/translate.hpp"

using namespace nlprog;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitCapExceeded = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  std::size_t cap = kDefaultEnumerationCap;
  bool permit_zero_weights = false;
  bool all_errors = false;
  std::string as_kind;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

enum class InputKind { Net, Program };

InputKind input_kind(const std::string& path, const GlobalOptions& opts) {
  if (opts.as_kind == "net") {
    return InputKind::Net;
  }
  if (opts.as_kind == "program") {
    return InputKind::Program;
  }
  if (path.ends_with(".nnet")) {
    return InputKind::Net;
  }
  if (path.ends_with(".nlp")) {
    return InputKind::Program;
  }
  if (path == "-") {
    throw UsageError("reading from stdin requires --as net|program");
  }
  throw UsageError("cannot infer the input kind of '" + path +
                   "'; use a .nnet or .nlp extension or pass --as net|program");
}

Operand load_operand(const std::string& path, const GlobalOptions& opts) {
  const InputKind kind = input_kind(path, opts);
  textio::ParseOptions parse_opts;
  parse_opts.filename = path == "-" ? "<stdin>" : path;
  parse_opts.permit_zero_weights = opts.permit_zero_weights;
  parse_opts.collect_all_errors = opts.all_errors;
  const std::string text = read_input(path);
  if (kind == InputKind::Net) {
    return textio::parse_net(text, parse_opts);
  }
  return textio::parse_program(text, parse_opts);
}

const Net& as_net(const Operand& op, const char* command) {
  if (const Net* net = std::get_if<Net>(&op)) {
    return *net;
  }
  throw UsageError(std::string(command) + " requires a net input");
}

Interpretation parse_members(const SignatureRef& sig, const std::string& csv) {
  std::vector<std::string> names;
  std::string current;
  std::istringstream in(csv);
  while (std::getline(in, current, ',')) {
    if (!current.empty()) {
      names.push_back(current);
    }
  }
  return Interpretation::from_names(sig, names);
}

void print_family(const GlobalOptions& opts, std::string_view kind, const SignatureRef& sig,
                  const std::vector<Interpretation>& family,
                  const std::vector<std::string>& notes) {
  for (const std::string& note : notes) {
    std::cerr << "note: " << note << "\n";
  }
  if (opts.json) {
    std::cout << textio::to_json_family(kind, sig, family, notes) << "\n";
    return;
  }
  for (const Interpretation& member : family) {
    std::cout << member.to_string() << "\n";
  }
}

void print_interpretation(const GlobalOptions& opts, std::string_view kind,
                          const Interpretation& value) {
  if (opts.json) {
    std::cout << textio::to_json_interpretation(kind, value) << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
}

int run_parse(const GlobalOptions& opts, const std::string& file) {
  Operand op = load_operand(file, opts);
  if (opts.json) {
    std::visit([](const auto& v) { std::cout << textio::to_json(v) << "\n"; }, op);
  } else if (const Net* net = std::get_if<Net>(&op)) {
    std::cout << textio::serialize_net(*net);
  } else {
    std::cout << textio::serialize_program(std::get<Program>(op));
  }
  return kExitSuccess;
}

int run_tp(const GlobalOptions& opts, const std::string& file, const std::string& interp_csv,
           std::size_t steps) {
  Operand op = load_operand(file, opts);
  const SignatureRef& sig = operand_sig(op);
  Interpretation start = parse_members(sig, interp_csv);
  auto step = [&op](const Interpretation& i) {
    if (const Net* net = std::get_if<Net>(&op)) {
      return t_n(*net, i);
    }
    return t_p(std::get<Program>(op), i);
  };
  IterationTrace trace = iterate(step, std::move(start), steps);
  if (opts.json) {
    std::cout << textio::to_json_trace(trace) << "\n";
  } else {
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      std::cout << trace.steps[i].to_string() << "\n";
    }
  }
  return kExitSuccess;
}

int run_lfp(const GlobalOptions& opts, const std::string& file) {
  Operand op = load_operand(file, opts);
  Interpretation least = std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Net>) {
          return least_model(v);
        } else {
          return least_model_p(v);
        }
      },
      op);
  print_interpretation(opts, "least_model", least);
  return kExitSuccess;
}

int run_models(const GlobalOptions& opts, const std::string& file, bool supported) {
  Operand op = load_operand(file, opts);
  const SignatureRef& sig = operand_sig(op);
  std::vector<Interpretation> family;
  if (const Net* net = std::get_if<Net>(&op)) {
    family = supported ? supported_models(*net, opts.cap) : models(*net, opts.cap);
  } else {
    const Program& prog = std::get<Program>(op);
    family = supported ? supported_models_p(prog, opts.cap) : models_p(prog, opts.cap);
  }
  print_family(opts, supported ? "supported_models" : "models", sig, family, {});
  return kExitSuccess;
}

int run_answersets(const GlobalOptions& opts, const std::string& file,
                   const std::string& semantics) {
  Operand op = load_operand(file, opts);
  const SignatureRef& sig = operand_sig(op);
  std::vector<Interpretation> family;
  std::vector<std::string> notes;
  std::string kind = "answer_sets";
  if (const Net* net = std::get_if<Net>(&op)) {
    if (semantics == "aft") {
      family = answer_sets(*net, opts.cap);
    } else if (semantics == "ultimate") {
      family = ultimate_answer_sets(*net, opts.cap);
      kind = "ultimate_answer_sets";
    } else {
      notes.push_back("FLP semantics is defined for programs; the net was translated first");
      family = flp_answer_sets(net_to_program(*net), opts.cap);
      kind = "flp_answer_sets";
    }
  } else {
    const Program& prog = std::get<Program>(op);
    if (semantics == "aft") {
      family = answer_sets_p(prog, opts.cap);
    } else if (semantics == "flp") {
      family = flp_answer_sets(prog, opts.cap);
      kind = "flp_answer_sets";
    } else {
      if (!classify(prog).minimalist) {
        throw ValidationError("ultimate semantics requires a net or a minimalist program");
      }
      family = ultimate_answer_sets_p(prog, opts.cap);
      kind = "ultimate_answer_sets";
    }
  }
  print_family(opts, kind, sig, family, notes);
  return kExitSuccess;
}

int run_eval(const GlobalOptions& opts, const std::string& file, const std::string& input_csv) {
  Operand op = load_operand(file, opts);
  const Net& net = as_net(op, "eval");
  LayeredNet layered = layers(net);
  Interpretation output = feed_forward(layered, parse_members(net.sig(), input_csv));
  print_interpretation(opts, "output", output);
  return kExitSuccess;
}

int run_layers(const GlobalOptions& opts, const std::string& file) {
  Operand op = load_operand(file, opts);
  const Net& net = as_net(op, "layers");
  LayeredNet layered = layers(net);
  if (opts.json) {
    std::cout << textio::to_json_layers(layered) << "\n";
  } else {
    for (std::size_t level = 1; level <= layered.depth(); ++level) {
      std::cout << level << ": " << layered.layer(level).to_string() << "\n";
    }
  }
  return kExitSuccess;
}

int run_translate(const GlobalOptions& opts, const std::string& file, const std::string& to) {
  Operand op = load_operand(file, opts);
  if (const Net* net = std::get_if<Net>(&op)) {
    if (to == "net") {
      throw UsageError("input is already a net");
    }
    Program prog = net_to_program(*net);
    std::cout << (opts.json ? textio::to_json(prog) + "\n" : textio::serialize_program(prog));
  } else {
    if (to == "program") {
      throw UsageError("input is already a program");
    }
    Net translated = program_to_net(std::get<Program>(op));
    std::cout << (opts.json ? textio::to_json(translated) + "\n"
                            : textio::serialize_net(translated));
  }
  return kExitSuccess;
}

int run_equiv(const GlobalOptions& opts, const std::string& file1, const std::string& file2,
              const std::string& kind_name) {
  Operand x = load_operand(file1, opts);
  Operand y = load_operand(file2, opts);
  EquivalenceOptions eq_opts;
  eq_opts.cap = opts.cap;

  const auto print_verdict = [&](const EquivalenceVerdict& v) {
    std::cout << to_string(v.kind) << ": " << (v.equivalent ? "equivalent" : "not equivalent")
              << "\n";
    if (v.witness) {
      std::cout << "  " << v.witness->description << "\n";
    }
  };

  if (kind_name.empty()) {
    LadderReport report = implication_ladder(x, y, eq_opts);
    if (opts.json) {
      std::cout << textio::to_json_ladder(report) << "\n";
    } else {
      for (const std::string& note : report.notes) {
        std::cerr << "note: " << note << "\n";
      }
      for (const EquivalenceVerdict& v : report.verdicts) {
        print_verdict(v);
      }
    }
    return report.all_equivalent() ? kExitSuccess : kExitNegative;
  }

  EquivalenceVerdict verdict = check(*parse_equivalence_kind(kind_name), x, y, eq_opts);
  if (opts.json) {
    std::cout << textio::to_json_verdict(verdict) << "\n";
  } else {
    print_verdict(verdict);
  }
  return verdict.equivalent ? kExitSuccess : kExitNegative;
}

int run_explore_flp(const oracle::GenParams& params, std::size_t count,
                    const std::string& out_dir) {
  oracle::ExperimentReport report = oracle::flp_experiment(params, count);
  const std::string json = textio::to_json_experiment(report);
  std::cout << json << "\n";
  std::cerr << report.instances << " instances, " << report.agreeing_instances
            << " agreeing, " << report.counterexamples.size() << " counterexamples\n";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / "report.json") << json << "\n";
    for (const oracle::Counterexample& ce : report.counterexamples) {
      std::ofstream(std::filesystem::path(out_dir) /
                    ("counterexample_" + std::to_string(ce.instance_index) + ".nlp"))
          << textio::serialize_program(ce.program);
    }
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semantics for boolean neural nets and neural logic programs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "emit JSON instead of text")->configurable(false);
  app.add_option("--cap", opts.cap, "largest universe enumerated exhaustively")
      ->envname("NLPROG_CAP");
  app.add_flag("--permit-zero-weights", opts.permit_zero_weights,
               "accept zero-weight body atoms when parsing");
  app.add_flag("--all-errors", opts.all_errors, "report every parse diagnostic, not just the first");
  app.add_option("--as", opts.as_kind, "input kind when the extension is not .nnet/.nlp")
      ->check(CLI::IsMember({"net", "program"}));

  oracle::GenParams gen;
  gen.neuron_count = {2, 6};
  gen.fact_count = {1, 2};
  app.add_option("--seed", gen.seed, "seed for randomized subcommands");

  std::string file;
  std::string file2;
  std::string interp_csv;
  std::string semantics = "aft";
  std::string to_kind;
  std::string equiv_kind;
  std::string out_dir;
  std::size_t steps = 1;
  bool supported = false;

  CLI::App* cmd_parse = app.add_subcommand("parse", "validate and reprint canonically");
  cmd_parse->add_option("file", file, "input file or -")->required();

  CLI::App* cmd_tp = app.add_subcommand("tp", "apply the one-step operator");
  cmd_tp->add_option("file", file, "input file or -")->required();
  cmd_tp->add_option("-I,--interpretation", interp_csv, "comma-separated active neurons");
  cmd_tp->add_option("--steps", steps, "number of applications")->check(CLI::PositiveNumber);

  CLI::App* cmd_lfp = app.add_subcommand("lfp", "least model of a positive input");
  cmd_lfp->add_option("file", file, "input file or -")->required();

  CLI::App* cmd_models = app.add_subcommand("models", "enumerate models");
  cmd_models->add_option("file", file, "input file or -")->required();
  cmd_models->add_flag("--supported", supported, "fixed points instead of prefixed points");

  CLI::App* cmd_answersets = app.add_subcommand("answersets", "enumerate answer sets");
  cmd_answersets->add_option("file", file, "input file or -")->required();
  cmd_answersets->add_option("--semantics", semantics, "aft, flp or ultimate")
      ->check(CLI::IsMember({"aft", "flp", "ultimate"}));

  CLI::App* cmd_eval = app.add_subcommand("eval", "run a layered net feed-forward");
  cmd_eval->add_option("file", file, "net file or -")->required();
  cmd_eval->add_option("--input", interp_csv, "comma-separated active input neurons");

  CLI::App* cmd_layers = app.add_subcommand("layers", "print the layer partition");
  cmd_layers->add_option("file", file, "net file or -")->required();

  CLI::App* cmd_translate = app.add_subcommand("translate", "convert between net and program");
  cmd_translate->add_option("file", file, "input file or -")->required();
  cmd_translate->add_option("--to", to_kind, "target kind")
      ->check(CLI::IsMember({"net", "program"}))
      ->required();

  CLI::App* cmd_equiv = app.add_subcommand("equiv", "decide equivalences of two inputs");
  cmd_equiv->add_option("file1", file, "first input")->required();
  cmd_equiv->add_option("file2", file2, "second input")->required();
  CLI::Option* kind_opt =
      cmd_equiv->add_option("--kind", equiv_kind,
                            "subsumption, supported, least, answerset or ultimate")
          ->check(CLI::IsMember({"subsumption", "supported", "least", "answerset", "ultimate"}));
  cmd_equiv->add_flag("--all", "run every applicable kind (the default)")->excludes(kind_opt);

  std::size_t count = 100;
  CLI::App* cmd_explore = app.add_subcommand("explore-flp", "compare answer set semantics on random programs");
  cmd_explore->add_option("--count", count, "number of random programs");
  cmd_explore->add_option("--min-neurons", gen.neuron_count.min, "smallest universe");
  cmd_explore->add_option("--max-neurons", gen.neuron_count.max, "largest universe (at most 8)");
  cmd_explore->add_option("--density", gen.density, "body atom probability");
  cmd_explore->add_option("--neg-fraction", gen.negative_fraction, "negative weight probability");
  cmd_explore->add_option("--out-dir", out_dir, "also write report.json and counterexamples there");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (cmd_parse->parsed()) {
      return run_parse(opts, file);
    }
    if (cmd_tp->parsed()) {
      return run_tp(opts, file, interp_csv, steps);
    }
    if (cmd_lfp->parsed()) {
      return run_lfp(opts, file);
    }
    if (cmd_models->parsed()) {
      return run_models(opts, file, supported);
    }
    if (cmd_answersets->parsed()) {
      return run_answersets(opts, file, semantics);
    }
    if (cmd_eval->parsed()) {
      return run_eval(opts, file, interp_csv);
    }
    if (cmd_layers->parsed()) {
      return run_layers(opts, file);
    }
    if (cmd_translate->parsed()) {
      return run_translate(opts, file, to_kind);
    }
    if (cmd_equiv->parsed()) {
      return run_equiv(opts, file, file2, equiv_kind);
    }
    if (cmd_explore->parsed()) {
      return run_explore_flp(gen, count, out_dir);
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const textio::ParseError& e) {
    for (const textio::Diagnostic& d : e.diagnostics()) {
      std::cerr << d.render() << "\n";
    }
    return kExitInvalid;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
