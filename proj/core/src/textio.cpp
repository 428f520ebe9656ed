#include "nlprog/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>

#include <json.hpp>

#include "nlprog/signature.hpp"

namespace nlprog::textio {

std::string to_string(DiagnosticCategory category) {
  switch (category) {
    case DiagnosticCategory::Lexical:
      return "lexical";
    case DiagnosticCategory::Syntactic:
      return "syntactic";
    case DiagnosticCategory::Validation:
      return "validation";
  }
  return "unknown";
}

std::string Diagnostic::render() const {
  std::ostringstream out;
  out << span.file << ":" << span.line << ":" << span.column << ": " << to_string(category)
      << ": " << message;
  return out.str();
}

std::string ParseError::render_all(const std::vector<Diagnostic>& diagnostics) {
  std::string result;
  for (const Diagnostic& d : diagnostics) {
    if (!result.empty()) {
      result += '\n';
    }
    result += d.render();
  }
  return result;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(render_all(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

enum class TokKind { Ident, Number, Dot, Comma, Colon, Equals, LeftArrow, RightArrow };

struct Token {
  TokKind kind;
  std::string text;
  SourceSpan span;
  Rational value;
};

std::string describe(const Token& tok) { return "'" + tok.text + "'"; }

/// Raised while parsing one statement; recovery skips to the next statement.
struct StatementError {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(SourceSpan span, DiagnosticCategory category, std::string message) {
  throw StatementError{Diagnostic{std::move(span), category, std::move(message)}};
}

class Lexer {
public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> tokens;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) {
        break;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        tokens.push_back(ident());
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(tokens, diags);
        continue;
      }
      switch (c) {
        case '.':
          tokens.push_back(punct(TokKind::Dot, 1));
          break;
        case ',':
          tokens.push_back(punct(TokKind::Comma, 1));
          break;
        case ':':
          tokens.push_back(punct(TokKind::Colon, 1));
          break;
        case '=':
          tokens.push_back(punct(TokKind::Equals, 1));
          break;
        case '<':
          if (peek(1) == '-') {
            tokens.push_back(punct(TokKind::LeftArrow, 2));
          } else {
            bad_char(diags, c);
          }
          break;
        case '-':
          if (peek(1) == '>') {
            tokens.push_back(punct(TokKind::RightArrow, 2));
          } else if (std::isdigit(static_cast<unsigned char>(peek(1)))) {
            lex_number(tokens, diags);
          } else {
            bad_char(diags, c);
          }
          break;
        default:
          bad_char(diags, c);
          break;
      }
    }
    return tokens;
  }

private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t count) {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance(1);
        }
      } else {
        break;
      }
    }
  }

  SourceSpan here(std::size_t length) const { return SourceSpan{file_, line_, column_, length}; }

  Token punct(TokKind kind, std::size_t length) {
    SourceSpan span = here(length);
    std::string text(text_.substr(pos_, length));
    advance(length);
    return Token{kind, std::move(text), std::move(span), {}};
  }

  Token ident() {
    const std::size_t start = pos_;
    SourceSpan span = here(0);
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        advance(1);
      } else {
        break;
      }
    }
    span.length = pos_ - start;
    return Token{TokKind::Ident, std::string(text_.substr(start, pos_ - start)), std::move(span),
                 {}};
  }

  /// Reads a digit string as a base-10 integer. cpp_int's string constructor
  /// would treat a leading zero as an octal prefix, so build the value by hand.
  static boost::multiprecision::cpp_int decimal(const std::string& digits) {
    boost::multiprecision::cpp_int out = 0;
    for (char c : digits) {
      out = out * 10 + (c - '0');
    }
    return out;
  }

  void lex_number(std::vector<Token>& tokens, std::vector<Diagnostic>& diags) {
    const std::size_t start = pos_;
    SourceSpan span = here(0);
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      advance(1);
    }
    const std::string integer = digits();
    Rational value;
    if (peek(0) == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance(1);
      const std::string denominator = digits();
      const boost::multiprecision::cpp_int den = decimal(denominator);
      if (den == 0) {
        span.length = pos_ - start;
        diags.push_back(Diagnostic{span, DiagnosticCategory::Validation,
                                   "rational with zero denominator"});
        value = 0;
      } else {
        value = Rational(decimal(integer), den);
      }
    } else if (peek(0) == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance(1);
      const std::string fraction = digits();
      boost::multiprecision::cpp_int scale = 1;
      for (std::size_t i = 0; i < fraction.size(); ++i) {
        scale *= 10;
      }
      value = Rational(decimal(integer) * scale + decimal(fraction), scale);
    } else {
      value = Rational(decimal(integer));
    }
    if (negative) {
      value = -value;
    }
    span.length = pos_ - start;
    tokens.push_back(Token{TokKind::Number, std::string(text_.substr(start, pos_ - start)),
                           std::move(span), std::move(value)});
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void bad_char(std::vector<Diagnostic>& diags, char c) {
    diags.push_back(Diagnostic{here(1), DiagnosticCategory::Lexical,
                               std::string("unexpected character '") + c + "'"});
    advance(1);
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// One statement's tokens, terminator excluded.
class Cursor {
public:
  Cursor(std::span<const Token> tokens, SourceSpan end) : tokens_(tokens), end_(std::move(end)) {}

  bool done() const { return index_ >= tokens_.size(); }

  const SourceSpan& end_span() const { return end_; }

  const Token& get(std::string_view what) {
    if (done()) {
      fail(end_, DiagnosticCategory::Syntactic, "expected " + std::string(what));
    }
    return tokens_[index_++];
  }

  const Token& expect(TokKind kind, std::string_view what) {
    const Token& tok = get(what);
    if (tok.kind != kind) {
      fail(tok.span, DiagnosticCategory::Syntactic,
           "expected " + std::string(what) + ", found " + describe(tok));
    }
    return tok;
  }

  const Token* peek() const { return done() ? nullptr : &tokens_[index_]; }

  void expect_end() {
    if (!done()) {
      fail(tokens_[index_].span, DiagnosticCategory::Syntactic,
           "unexpected " + describe(tokens_[index_]) + " before '.'");
    }
  }

private:
  std::span<const Token> tokens_;
  std::size_t index_ = 0;
  SourceSpan end_;
};

struct Statement {
  std::vector<Token> tokens;
  SourceSpan dot;
};

std::vector<Statement> split_statements(std::vector<Token> tokens,
                                        std::vector<Diagnostic>& diags) {
  std::vector<Statement> statements;
  Statement current;
  for (Token& tok : tokens) {
    if (tok.kind == TokKind::Dot) {
      current.dot = tok.span;
      statements.push_back(std::move(current));
      current = Statement{};
    } else {
      current.tokens.push_back(std::move(tok));
    }
  }
  if (!current.tokens.empty()) {
    diags.push_back(Diagnostic{current.tokens.back().span, DiagnosticCategory::Syntactic,
                               "statement not terminated with '.'"});
  }
  return statements;
}

void check_neuron_name(const Token& tok) {
  if (!NeuronId::is_valid_name(tok.text)) {
    fail(tok.span, DiagnosticCategory::Validation,
         describe(tok) + " is a reserved word and cannot name a neuron");
  }
}

// ---- program parsing ----

struct ThetaDecl {
  Token name;
  Token value;
};

struct FactStmt {
  Token name;
};

struct RuleAtom {
  Token name;
  std::optional<Token> weight;
};

struct RuleStmt {
  Token head;
  std::vector<RuleAtom> body;
};

using ProgStmt = std::variant<ThetaDecl, FactStmt, RuleStmt>;

ProgStmt parse_program_statement(Cursor& cur) {
  const Token& first = cur.expect(TokKind::Ident, "a neuron name or 'theta'");
  if (first.text == "theta") {
    const Token& name = cur.expect(TokKind::Ident, "a neuron name after 'theta'");
    check_neuron_name(name);
    cur.expect(TokKind::Equals, "'=' after the neuron name");
    const Token& value = cur.expect(TokKind::Number, "a rational threshold");
    cur.expect_end();
    return ThetaDecl{name, value};
  }
  check_neuron_name(first);
  if (cur.done()) {
    return FactStmt{first};
  }
  cur.expect(TokKind::LeftArrow, "'<-' or '.' after the head");
  RuleStmt rule{first, {}};
  while (true) {
    RuleAtom atom;
    atom.name = cur.expect(TokKind::Ident, "a body atom");
    check_neuron_name(atom.name);
    if (cur.peek() && cur.peek()->kind == TokKind::Colon) {
      cur.get("':'");
      atom.weight = cur.expect(TokKind::Number, "a rational weight after ':'");
    }
    rule.body.push_back(std::move(atom));
    if (cur.done()) {
      break;
    }
    cur.expect(TokKind::Comma, "',' between body atoms");
  }
  return rule;
}

class UniverseBuilder {
public:
  std::size_t intern(const Token& tok) {
    auto [it, inserted] = index_.try_emplace(tok.text, names_.size());
    if (inserted) {
      names_.push_back(tok.text);
      first_spans_.push_back(tok.span);
    }
    return it->second;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const SourceSpan& first_span(std::size_t i) const { return first_spans_[i]; }

private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
  std::vector<SourceSpan> first_spans_;
};

Program build_program(const std::vector<ProgStmt>& statements, const ParseOptions& opts,
                      std::vector<Diagnostic>& diags) {
  UniverseBuilder universe;
  struct NeuronState {
    std::optional<Rational> declared;
    std::optional<SourceSpan> declared_span;
    bool is_fact = false;
    std::vector<std::size_t> rule_body_sizes;
    bool unit_weights_only = true;
  };
  std::vector<NeuronState> state;
  auto intern = [&](const Token& tok) {
    const std::size_t idx = universe.intern(tok);
    if (state.size() < universe.size()) {
      state.resize(universe.size());
    }
    return idx;
  };

  struct PendingRule {
    std::size_t head;
    std::vector<BodyAtom> body;
  };
  std::vector<PendingRule> pending;

  for (const ProgStmt& stmt : statements) {
    if (const auto* theta = std::get_if<ThetaDecl>(&stmt)) {
      const std::size_t idx = intern(theta->name);
      if (state[idx].declared) {
        diags.push_back(Diagnostic{theta->name.span, DiagnosticCategory::Validation,
                                   "duplicate threshold declaration for '" + theta->name.text +
                                       "'"});
        continue;
      }
      state[idx].declared = theta->value.value;
      state[idx].declared_span = theta->name.span;
    } else if (const auto* fact = std::get_if<FactStmt>(&stmt)) {
      const std::size_t idx = intern(fact->name);
      state[idx].is_fact = true;
    } else {
      const auto& rule = std::get<RuleStmt>(stmt);
      const std::size_t head = intern(rule.head);
      PendingRule built{head, {}};
      bool ok = true;
      for (const RuleAtom& atom : rule.body) {
        const std::size_t idx = intern(atom.name);
        const bool seen = std::any_of(built.body.begin(), built.body.end(),
                                      [idx](const BodyAtom& b) { return b.neuron == idx; });
        if (seen) {
          diags.push_back(Diagnostic{atom.name.span, DiagnosticCategory::Validation,
                                     "body atom '" + atom.name.text + "' appears twice"});
          ok = false;
          continue;
        }
        Rational weight = atom.weight ? atom.weight->value : Rational(1);
        if (weight == 0 && !opts.permit_zero_weights) {
          diags.push_back(Diagnostic{atom.weight->span, DiagnosticCategory::Validation,
                                     "zero-weight body atom '" + atom.name.text + "'"});
          ok = false;
          continue;
        }
        if (weight != 1) {
          state[head].unit_weights_only = false;
        }
        built.body.push_back(BodyAtom{idx, std::move(weight)});
      }
      state[head].rule_body_sizes.push_back(rule.body.size());
      if (ok) {
        pending.push_back(std::move(built));
      }
    }
  }

  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (state[i].is_fact) {
      if (state[i].declared) {
        diags.push_back(Diagnostic{*state[i].declared_span, DiagnosticCategory::Validation,
                                   "'" + universe.name(i) +
                                       "' is a fact; it cannot carry a threshold declaration"});
      }
      if (!state[i].rule_body_sizes.empty()) {
        diags.push_back(Diagnostic{universe.first_span(i), DiagnosticCategory::Validation,
                                   "'" + universe.name(i) + "' is both a fact and a rule head"});
      }
      continue;
    }
    if (!state[i].declared && !state[i].unit_weights_only) {
      diags.push_back(Diagnostic{universe.first_span(i), DiagnosticCategory::Validation,
                                 "missing threshold for neuron '" + universe.name(i) + "'"});
    }
  }

  if (!diags.empty()) {
    return Program::make(SignatureBuilder().build(), {});
  }

  SignatureBuilder builder;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (state[i].is_fact) {
      builder.add(universe.name(i), ExtendedRational::neg_infinity());
    } else if (state[i].declared) {
      builder.add(universe.name(i), ExtendedRational(*state[i].declared));
    } else {
      const auto& sizes = state[i].rule_body_sizes;
      const std::size_t largest =
          sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
      builder.add(universe.name(i), ExtendedRational(Rational(largest)));
    }
  }
  SignatureRef sig = builder.build();

  std::vector<NeuralRule> rules;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (state[i].is_fact) {
      rules.emplace_back(i, std::vector<BodyAtom>{});
    }
  }
  for (PendingRule& rule : pending) {
    rules.emplace_back(rule.head, std::move(rule.body), opts.permit_zero_weights);
  }
  return Program::make(std::move(sig), std::move(rules));
}

// ---- net parsing ----

struct NodeDecl {
  Token name;
  std::optional<Token> theta;
};

struct EdgeDecl {
  Token source;
  Token target;
  Token weight;
};

using NetStmt = std::variant<NodeDecl, EdgeDecl>;

NetStmt parse_net_statement(Cursor& cur) {
  const Token& first = cur.expect(TokKind::Ident, "'node' or 'edge'");
  if (first.text == "node") {
    const Token& name = cur.expect(TokKind::Ident, "a neuron name after 'node'");
    check_neuron_name(name);
    const Token& what = cur.expect(TokKind::Ident, "'fact' or 'theta'");
    if (what.text == "fact") {
      cur.expect_end();
      return NodeDecl{name, std::nullopt};
    }
    if (what.text == "theta") {
      const Token& value = cur.expect(TokKind::Number, "a rational threshold");
      cur.expect_end();
      return NodeDecl{name, value};
    }
    fail(what.span, DiagnosticCategory::Syntactic,
         "expected 'fact' or 'theta', found " + describe(what));
  }
  if (first.text == "edge") {
    EdgeDecl edge;
    edge.source = cur.expect(TokKind::Ident, "a source neuron");
    check_neuron_name(edge.source);
    cur.expect(TokKind::RightArrow, "'->'");
    edge.target = cur.expect(TokKind::Ident, "a target neuron");
    check_neuron_name(edge.target);
    cur.expect(TokKind::Colon, "':' before the weight");
    edge.weight = cur.expect(TokKind::Number, "a rational weight");
    cur.expect_end();
    return edge;
  }
  fail(first.span, DiagnosticCategory::Syntactic,
       "expected 'node' or 'edge', found " + describe(first));
}

Net build_net(const std::vector<NetStmt>& statements, std::vector<Diagnostic>& diags) {
  std::map<std::string, std::size_t> index;
  std::vector<const NodeDecl*> nodes;
  for (const NetStmt& stmt : statements) {
    if (const auto* node = std::get_if<NodeDecl>(&stmt)) {
      auto [it, inserted] = index.try_emplace(node->name.text, nodes.size());
      if (!inserted) {
        diags.push_back(Diagnostic{node->name.span, DiagnosticCategory::Validation,
                                   "duplicate node declaration for '" + node->name.text + "'"});
        continue;
      }
      nodes.push_back(node);
    }
  }

  struct PendingEdge {
    std::size_t source;
    std::size_t target;
    Rational weight;
  };
  std::vector<PendingEdge> edges;
  std::vector<char> has_incoming(nodes.size(), 0);
  for (const NetStmt& stmt : statements) {
    const auto* edge = std::get_if<EdgeDecl>(&stmt);
    if (!edge) {
      continue;
    }
    bool ok = true;
    for (const Token* endpoint : {&edge->source, &edge->target}) {
      if (!index.contains(endpoint->text)) {
        diags.push_back(Diagnostic{endpoint->span, DiagnosticCategory::Validation,
                                   "unknown neuron '" + endpoint->text + "'"});
        ok = false;
      }
    }
    if (!ok) {
      continue;
    }
    const std::size_t source = index[edge->source.text];
    const std::size_t target = index[edge->target.text];
    if (edge->weight.value == 0) {
      diags.push_back(Diagnostic{edge->weight.span, DiagnosticCategory::Validation,
                                 "zero-weight edge; omit the edge instead"});
      continue;
    }
    if (!nodes[target]->theta) {
      diags.push_back(Diagnostic{edge->target.span, DiagnosticCategory::Validation,
                                 "fact '" + edge->target.text + "' cannot have incoming edges"});
      continue;
    }
    const bool duplicate =
        std::any_of(edges.begin(), edges.end(), [&](const PendingEdge& e) {
          return e.source == source && e.target == target;
        });
    if (duplicate) {
      diags.push_back(Diagnostic{edge->source.span, DiagnosticCategory::Validation,
                                 "duplicate edge from '" + edge->source.text + "' to '" +
                                     edge->target.text + "'"});
      continue;
    }
    edges.push_back(PendingEdge{source, target, edge->weight.value});
    has_incoming[target] = 1;
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i]->theta && !has_incoming[i]) {
      diags.push_back(Diagnostic{nodes[i]->name.span, DiagnosticCategory::Validation,
                                 "neuron '" + nodes[i]->name.text +
                                     "' has a threshold but no incoming edges; declare it a "
                                     "fact or add edges"});
    }
  }

  if (!diags.empty()) {
    return Net::make(SignatureBuilder().build(), {});
  }

  SignatureBuilder builder;
  for (const NodeDecl* node : nodes) {
    if (node->theta) {
      builder.add(node->name.text, ExtendedRational(node->theta->value));
    } else {
      builder.add(node->name.text, ExtendedRational::neg_infinity());
    }
  }
  std::vector<Edge> built;
  built.reserve(edges.size());
  for (const PendingEdge& e : edges) {
    built.push_back(Edge{e.source, e.target, e.weight});
  }
  return Net::make(builder.build(), built);
}

// ---- shared driver ----

template <typename Stmt, typename Value>
Value parse_driver(std::string_view text, const ParseOptions& opts,
                   Stmt (*parse_statement)(Cursor&),
                   Value (*build)(const std::vector<Stmt>&, const ParseOptions&,
                                  std::vector<Diagnostic>&)) {
  std::vector<Diagnostic> diags;
  Lexer lexer(text, opts.filename);
  std::vector<Token> tokens = lexer.run(diags);
  std::vector<Statement> raw = split_statements(std::move(tokens), diags);

  std::vector<Stmt> statements;
  for (const Statement& statement : raw) {
    Cursor cur(statement.tokens, statement.dot);
    try {
      statements.push_back(parse_statement(cur));
    } catch (const StatementError& err) {
      diags.push_back(err.diagnostic);
    }
  }
  auto finish = [&]() {
    if (diags.empty()) {
      return;
    }
    if (opts.collect_all_errors) {
      throw ParseError(std::move(diags));
    }
    throw ParseError({diags.front()});
  };
  finish();
  Value value = build(statements, opts, diags);
  finish();
  return value;
}

Net build_net_adapter(const std::vector<NetStmt>& statements, const ParseOptions&,
                      std::vector<Diagnostic>& diags) {
  return build_net(statements, diags);
}

}  // namespace

Program parse_program(std::string_view text, const ParseOptions& opts) {
  return parse_driver<ProgStmt, Program>(text, opts, parse_program_statement, build_program);
}

Net parse_net(std::string_view text, const ParseOptions& opts) {
  return parse_driver<NetStmt, Net>(text, opts, parse_net_statement, build_net_adapter);
}

// ---- serialization ----

namespace {

std::string render_rational(const Rational& value) { return nlprog::to_string(value); }

}  // namespace

std::string serialize_program(const Program& prog) {
  const SignatureRef& sig = prog.sig();
  Interpretation facts = prog.facts();
  std::string out;
  for (std::size_t i = 0; i < sig->size(); ++i) {
    if (facts.test(i)) {
      out += sig->neuron(i).name() + ".\n";
    } else {
      out += "theta " + sig->neuron(i).name() + " = " +
             render_rational(sig->threshold(i).value()) + ".\n";
    }
  }
  for (const NeuralRule& rule : prog.rules()) {
    if (rule.is_fact()) {
      continue;
    }
    out += sig->neuron(rule.head()).name() + " <- ";
    bool first = true;
    for (const BodyAtom& atom : rule.body()) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += sig->neuron(atom.neuron).name();
      if (atom.weight != 1) {
        out += " : " + render_rational(atom.weight);
      }
    }
    out += ".\n";
  }
  return out;
}

std::string serialize_net(const Net& net) {
  const SignatureRef& sig = net.sig();
  std::string out;
  for (std::size_t i = 0; i < sig->size(); ++i) {
    if (net.is_fact(i)) {
      out += "node " + sig->neuron(i).name() + " fact.\n";
    } else {
      out += "node " + sig->neuron(i).name() + " theta " +
             render_rational(sig->threshold(i).value()) + ".\n";
    }
  }
  for (const Edge& edge : net.edges()) {
    out += "edge " + sig->neuron(edge.source).name() + " -> " + sig->neuron(edge.target).name() +
           " : " + render_rational(edge.weight) + ".\n";
  }
  return out;
}

// ---- JSON ----

namespace {

using Json = nlohmann::ordered_json;

Json json_universe(const SignatureRef& sig) {
  Json names = Json::array();
  for (const NeuronId& id : sig->universe()) {
    names.push_back(id.name());
  }
  return names;
}

Json json_thresholds(const SignatureRef& sig) {
  Json thresholds = Json::object();
  for (std::size_t i = 0; i < sig->size(); ++i) {
    const ExtendedRational& theta = sig->threshold(i);
    thresholds[sig->neuron(i).name()] =
        theta.is_neg_infinity() ? "-inf" : render_rational(theta.value());
  }
  return thresholds;
}

Json json_members(const Interpretation& interp) {
  std::vector<std::string> names = interp.member_names();
  std::sort(names.begin(), names.end());
  return Json(names);
}

Json json_family_members(std::vector<Interpretation> family) {
  std::vector<Json> members;
  members.reserve(family.size());
  for (const Interpretation& interp : family) {
    members.push_back(json_members(interp));
  }
  std::sort(members.begin(), members.end());
  return Json(members);
}

Json json_witness(const EquivalenceWitness& witness) {
  Json out = Json::object();
  out["description"] = witness.description;
  if (witness.point) {
    out["point"] = json_members(*witness.point);
  }
  if (witness.upper) {
    out["upper"] = json_members(*witness.upper);
  }
  if (witness.lhs_value) {
    out["lhs"] = json_members(*witness.lhs_value);
  }
  if (witness.rhs_value) {
    out["rhs"] = json_members(*witness.rhs_value);
  }
  return out;
}

Json json_verdict_value(const EquivalenceVerdict& verdict) {
  Json out = Json::object();
  out["check"] = nlprog::to_string(verdict.kind);
  out["equivalent"] = verdict.equivalent;
  if (verdict.witness) {
    out["witness"] = json_witness(*verdict.witness);
  }
  return out;
}

}  // namespace

std::string to_json(const Net& net) {
  Json out = Json::object();
  out["kind"] = "net";
  out["universe"] = json_universe(net.sig());
  out["thresholds"] = json_thresholds(net.sig());
  Json edges = Json::array();
  for (const Edge& edge : net.edges()) {
    Json e = Json::object();
    e["source"] = net.sig()->neuron(edge.source).name();
    e["target"] = net.sig()->neuron(edge.target).name();
    e["weight"] = render_rational(edge.weight);
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  return out.dump(2);
}

std::string to_json(const Program& prog) {
  Json out = Json::object();
  out["kind"] = "program";
  out["universe"] = json_universe(prog.sig());
  out["thresholds"] = json_thresholds(prog.sig());
  Json rules = Json::array();
  for (const NeuralRule& rule : prog.rules()) {
    Json r = Json::object();
    r["head"] = prog.sig()->neuron(rule.head()).name();
    Json body = Json::array();
    for (const BodyAtom& atom : rule.body()) {
      Json b = Json::object();
      b["atom"] = prog.sig()->neuron(atom.neuron).name();
      b["weight"] = render_rational(atom.weight);
      body.push_back(std::move(b));
    }
    r["body"] = std::move(body);
    rules.push_back(std::move(r));
  }
  out["rules"] = std::move(rules);
  return out.dump(2);
}

std::string to_json_interpretation(std::string_view kind, const Interpretation& interp) {
  Json out = Json::object();
  out["kind"] = std::string(kind);
  out["universe"] = json_universe(interp.sig());
  out["members"] = json_members(interp);
  return out.dump(2);
}

std::string to_json_family(std::string_view kind, const SignatureRef& sig,
                           const std::vector<Interpretation>& family,
                           const std::vector<std::string>& notes) {
  Json out = Json::object();
  out["kind"] = std::string(kind);
  out["universe"] = json_universe(sig);
  out["count"] = family.size();
  out["members"] = json_family_members(family);
  if (!notes.empty()) {
    out["notes"] = notes;
  }
  return out.dump(2);
}

std::string to_json_trace(const IterationTrace& trace) {
  Json out = Json::object();
  out["kind"] = "trace";
  if (!trace.steps.empty()) {
    out["universe"] = json_universe(trace.steps.front().sig());
  }
  Json steps = Json::array();
  for (const Interpretation& step : trace.steps) {
    steps.push_back(json_members(step));
  }
  out["steps"] = std::move(steps);
  out["converged"] = trace.converged;
  return out.dump(2);
}

std::string to_json_layers(const LayeredNet& layered) {
  Json out = Json::object();
  out["kind"] = "layers";
  out["universe"] = json_universe(layered.net().sig());
  Json layer_array = Json::array();
  for (std::size_t level = 1; level <= layered.depth(); ++level) {
    layer_array.push_back(json_members(layered.layer(level)));
  }
  out["layers"] = std::move(layer_array);
  return out.dump(2);
}

std::string to_json_verdict(const EquivalenceVerdict& verdict) {
  Json out = json_verdict_value(verdict);
  out["kind"] = "equivalence";
  return out.dump(2);
}

std::string to_json_ladder(const LadderReport& report) {
  Json out = Json::object();
  out["kind"] = "equivalence";
  Json checks = Json::array();
  for (const EquivalenceVerdict& verdict : report.verdicts) {
    checks.push_back(json_verdict_value(verdict));
  }
  out["checks"] = std::move(checks);
  if (!report.notes.empty()) {
    out["notes"] = report.notes;
  }
  out["all_equivalent"] = report.all_equivalent();
  return out.dump(2);
}

std::string to_json_experiment(const oracle::ExperimentReport& report) {
  Json out = Json::object();
  out["kind"] = "flp_experiment";
  Json params = Json::object();
  params["neuron_count"] = {report.params.neuron_count.min, report.params.neuron_count.max};
  params["fact_count"] = {report.params.fact_count.min, report.params.fact_count.max};
  params["density"] = report.params.density;
  params["negative_fraction"] = report.params.negative_fraction;
  params["numerator_bound"] = report.params.numerator_bound;
  params["denominator_bound"] = report.params.denominator_bound;
  params["seed"] = report.params.seed;
  out["params"] = std::move(params);
  out["instances"] = report.instances;
  out["agreeing_instances"] = report.agreeing_instances;
  Json counterexamples = Json::array();
  for (const oracle::Counterexample& ce : report.counterexamples) {
    Json c = Json::object();
    c["instance_index"] = ce.instance_index;
    c["instance_seed"] = ce.instance_seed;
    c["witness"] = json_members(ce.witness);
    c["program"] = serialize_program(ce.program);
    counterexamples.push_back(std::move(c));
  }
  out["counterexamples"] = std::move(counterexamples);
  return out.dump(2);
}

}  // namespace nlprog::textio
