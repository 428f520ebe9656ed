#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "nlprog/equivalence.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/oracle.hpp"
#include "nlprog/program_semantics.hpp"
#include "nlprog/textio.hpp"
#include "nlprog/translate.hpp"
#include "support.hpp"

using namespace nlprog;
using namespace nlprog::textio;
using Json = nlohmann::json;

TEST_CASE("a program source with every statement form parses") {
  const char* text =
      "% facts first\n"
      "a.\n"
      "theta b = 1.\n"
      "theta c = -1/2.\n"
      "b <- a.\n"
      "c <- a : 3/2, b : -1.\n";
  Program p = parse_program(text);
  REQUIRE(p.sig()->size() == 3);
  CHECK(p.sig()->neuron(0).name() == "a");
  CHECK(p.sig()->threshold(0).is_neg_infinity());
  CHECK(p.sig()->threshold(1) == ExtendedRational(1));
  CHECK(p.sig()->threshold(2) == ExtendedRational(Rational(-1, 2)));
  REQUIRE(p.rules().size() == 3);
  const NeuralRule& rule_c = p.rules_for(2).front();
  REQUIRE(rule_c.body().size() == 2);
  CHECK(rule_c.body()[0].weight == Rational(3, 2));
  CHECK(rule_c.body()[1].weight == Rational(-1));
}

TEST_CASE("decimal weights parse as exact rationals") {
  Program p = parse_program("a.\ntheta b = 0.5.\nb <- a : 0.25.\n");
  CHECK(p.sig()->threshold(1) == ExtendedRational(Rational(1, 2)));
  CHECK(p.rules_for(1).front().body().front().weight == Rational(1, 4));
}

TEST_CASE("negative decimals and fractions keep their sign") {
  Program p = parse_program("a.\ntheta b = -0.75.\nb <- a : -2/4.\n");
  CHECK(p.sig()->threshold(1) == ExtendedRational(Rational(-3, 4)));
  CHECK(p.rules_for(1).front().body().front().weight == Rational(-1, 2));
}

TEST_CASE("an undeclared unit-weight head defaults to its largest body") {
  Program p = parse_program("a.\nb.\nc <- a.\nc <- a, b.\n");
  CHECK(p.sig()->threshold(p.sig()->require("c")) == ExtendedRational(2));
}

TEST_CASE("a body-only neuron defaults to threshold zero") {
  Program p = parse_program("a.\nb <- q.\ntheta b = 1.\n");
  CHECK(p.sig()->threshold(p.sig()->require("q")) == ExtendedRational(0));
}

TEST_CASE("a non-unit rule without a declared threshold is an error") {
  CHECK_THROWS_AS(parse_program("a.\nb <- a : 2.\n"), ParseError);
  try {
    parse_program("a.\nb <- a : 2.\n");
  } catch (const ParseError& e) {
    CHECK(e.first().category == DiagnosticCategory::Validation);
    CHECK(e.first().message.find("missing threshold") != std::string::npos);
  }
}

TEST_CASE("universe order is first occurrence order") {
  Program p = parse_program("theta z = 1.\na.\nz <- a.\n");
  CHECK(p.sig()->neuron(0).name() == "z");
  CHECK(p.sig()->neuron(1).name() == "a");
}

TEST_CASE("comments and blank lines are ignored, line endings may be CRLF") {
  Program p = parse_program("% leading comment\r\n\r\na.  % trailing comment\r\nb <- a.\r\n");
  CHECK(p.sig()->size() == 2);
  CHECK(p.rules().size() == 2);
}

TEST_CASE("parse errors carry exact source positions") {
  try {
    parse_program("a.\nb <- .\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.first().category == DiagnosticCategory::Syntactic);
    CHECK(e.first().span.line == 2);
    CHECK(e.first().span.column == 6);
    CHECK(e.first().render().find("<input>:2:6") == 0);
  }

  try {
    parse_program("a.\ntheta a = 1.\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.first().category == DiagnosticCategory::Validation);
    CHECK(e.first().span.line == 2);
    CHECK(e.first().span.column == 7);
  }
}

TEST_CASE("the filename option lands in rendered diagnostics") {
  ParseOptions opts;
  opts.filename = "demo.nlp";
  try {
    parse_program("a", opts);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.first().render().find("demo.nlp:1:1") == 0);
    CHECK(e.first().message.find("not terminated") != std::string::npos);
  }
}

TEST_CASE("error collection reports every diagnostic at once") {
  ParseOptions opts;
  opts.collect_all_errors = true;
  try {
    parse_program("theta b = 1/0.\nb <- ? a.\nc <- .\n", opts);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.diagnostics().size() == 3);
    CHECK(e.diagnostics()[0].category == DiagnosticCategory::Validation);
    CHECK(e.diagnostics()[1].category == DiagnosticCategory::Lexical);
    CHECK(e.diagnostics()[2].category == DiagnosticCategory::Syntactic);
  }

  try {
    parse_program("theta b = 1/0.\nb <- ? a.\nc <- .\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.diagnostics().size() == 1);
  }
}

TEST_CASE("reserved words cannot name neurons") {
  for (const char* text : {"node.\n", "edge <- a.\n", "a <- fact.\n", "theta theta = 1.\n"}) {
    CHECK_THROWS_AS(parse_program(text), ParseError);
  }
}

TEST_CASE("program validation errors surface as diagnostics") {
  CHECK_THROWS_WITH_AS(parse_program("a.\ntheta a = 1.\na <- a.\n"),
                       doctest::Contains("is a fact"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("a.\nb <- a, a.\ntheta b = 1.\n"),
                       doctest::Contains("appears twice"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("a.\nb <- a : 0.\n"),
                       doctest::Contains("zero-weight"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("theta b = 1.\ntheta b = 2.\n"),
                       doctest::Contains("duplicate threshold"), ParseError);
}

TEST_CASE("zero weights parse under the permissive option") {
  ParseOptions opts;
  opts.permit_zero_weights = true;
  Program p = parse_program("a.\ntheta b = 1.\nb <- a : 0.\n", opts);
  CHECK(p.rules_for(1).front().body().front().weight == Rational(0));
  CHECK(least_model_p(p) == Interpretation(p.sig(), {"a"}));
}

TEST_CASE("a net source with every statement form parses") {
  const char* text =
      "% three neurons\n"
      "node a fact.\n"
      "node b theta 1.\n"
      "node c theta 0.\n"
      "edge a -> b : 1.\n"
      "edge b -> c : -1.\n";
  Net net = parse_net(text);
  CHECK(net == tests::n1());
}

TEST_CASE("net validation errors surface as diagnostics") {
  CHECK_THROWS_WITH_AS(parse_net("node a fact.\nnode a theta 1.\n"),
                       doctest::Contains("duplicate node"), ParseError);
  CHECK_THROWS_WITH_AS(parse_net("node a fact.\nedge a -> b : 1.\n"),
                       doctest::Contains("unknown neuron"), ParseError);
  CHECK_THROWS_WITH_AS(parse_net("node a fact.\nnode b theta 1.\nedge a -> b : 0.\n"),
                       doctest::Contains("zero-weight edge"), ParseError);
  CHECK_THROWS_WITH_AS(parse_net("node a fact.\nnode b fact.\nedge a -> b : 1.\n"),
                       doctest::Contains("cannot have incoming edges"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_net("node a fact.\nnode b theta 1.\nedge a -> b : 1.\nedge a -> b : 2.\n"),
      doctest::Contains("duplicate edge"), ParseError);
  CHECK_THROWS_WITH_AS(parse_net("node a fact.\nnode b theta 1.\n"),
                       doctest::Contains("no incoming edges"), ParseError);
}

TEST_CASE("serialization is canonical and reparses to the same value") {
  const Net net = tests::n1();
  std::string text = serialize_net(net);
  CHECK(text ==
        "node a fact.\n"
        "node b theta 1.\n"
        "node c theta 0.\n"
        "edge a -> b : 1.\n"
        "edge b -> c : -1.\n");
  CHECK(parse_net(text) == net);

  const Program p = net_to_program(net);
  std::string ptext = serialize_program(p);
  CHECK(ptext ==
        "a.\n"
        "theta b = 1.\n"
        "theta c = 0.\n"
        "b <- a.\n"
        "c <- b : -1.\n");
  CHECK(parse_program(ptext) == p);
}

TEST_CASE("random nets and programs round-trip byte-stably") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 8};
    params.fact_count = {0, 2};
    params.negative_fraction = 0.4;

    Net net = oracle::random_net(params);
    std::string text = serialize_net(net);
    Net reparsed = parse_net(text);
    CHECK(reparsed == net);
    CHECK(serialize_net(reparsed) == text);

    Program prog = oracle::random_program(params);
    std::string ptext = serialize_program(prog);
    Program preparsed = parse_program(ptext);
    CHECK(preparsed == prog);
    CHECK(serialize_program(preparsed) == ptext);
  }
}

TEST_CASE("net json carries the exact rationals as strings") {
  Json j = Json::parse(to_json(tests::n1()));
  CHECK(j["kind"] == "net");
  CHECK(j["universe"] == Json::array({"a", "b", "c"}));
  CHECK(j["thresholds"]["a"] == "-inf");
  CHECK(j["thresholds"]["b"] == "1");
  REQUIRE(j["edges"].size() == 2);
  CHECK(j["edges"][1]["weight"] == "-1");
}

TEST_CASE("program json lists rules with weighted bodies") {
  Json j = Json::parse(to_json(tests::divergent_program()));
  CHECK(j["kind"] == "program");
  CHECK(j["thresholds"]["a"] == "-1/2");
  REQUIRE(j["rules"].size() == 2);
  CHECK(j["rules"][0]["head"] == "a");
  CHECK(j["rules"][0]["body"][0]["atom"] == "b");
  CHECK(j["rules"][0]["body"][0]["weight"] == "-1");
  CHECK(j["rules"][1]["head"] == "c");
  CHECK(j["rules"][1]["body"].empty());
}

TEST_CASE("interpretation and family json sort members") {
  const Net net = tests::n1();
  Json j = Json::parse(to_json_interpretation("step", Interpretation(net.sig(), {"c", "a"})));
  CHECK(j["kind"] == "step");
  CHECK(j["members"] == Json::array({"a", "c"}));

  Json fam = Json::parse(
      to_json_family("answersets", net.sig(), answer_sets(net), {"note one"}));
  CHECK(fam["count"] == 1);
  CHECK(fam["members"] == Json::array({Json::array({"a", "b"})}));
  CHECK(fam["notes"] == Json::array({"note one"}));
}

TEST_CASE("trace json records the chain and convergence") {
  const Net net = tests::n1();
  IterationTrace trace =
      iterate([&](const Interpretation& i) { return t_n(net, i); },
              Interpretation(net.sig()), 10);
  Json j = Json::parse(to_json_trace(trace));
  CHECK(j["kind"] == "trace");
  CHECK(j["converged"] == true);
  REQUIRE(j["steps"].size() == 5);
  CHECK(j["steps"][0] == Json::array());
  CHECK(j["steps"][1] == Json::array({"a", "c"}));
}

TEST_CASE("layers json lists layers bottom up") {
  Json j = Json::parse(to_json_layers(layers(tests::xor_net())));
  CHECK(j["kind"] == "layers");
  REQUIRE(j["layers"].size() == 3);
  CHECK(j["layers"][0] == Json::array({"x", "y"}));
  CHECK(j["layers"][2] == Json::array({"z"}));
}

TEST_CASE("verdict and ladder json expose witnesses") {
  Operand x = tests::n1();
  Operand y = net_to_program(tests::n1());
  Json j = Json::parse(to_json_ladder(implication_ladder(x, y)));
  CHECK(j["kind"] == "equivalence");
  CHECK(j["all_equivalent"] == true);
  CHECK(j["checks"].size() == 4);
  REQUIRE(j["notes"].size() == 1);

  Operand z = tests::divergent_program();
  EquivalenceVerdict v = check(EquivalenceKind::Subsumption, x, z);
  Json vj = Json::parse(to_json_verdict(v));
  CHECK(vj["equivalent"] == false);
  CHECK(vj["witness"].contains("point"));
  CHECK(vj["witness"].contains("lhs"));
  CHECK(vj["witness"].contains("rhs"));
}

TEST_CASE("experiment json is reproducible from its parameters") {
  oracle::GenParams params;
  params.neuron_count = {2, 5};
  params.fact_count = {1, 2};
  params.negative_fraction = 0.4;
  params.seed = 11;
  std::string a = to_json_experiment(oracle::flp_experiment(params, 40));
  std::string b = to_json_experiment(oracle::flp_experiment(params, 40));
  CHECK(a == b);

  Json j = Json::parse(a);
  CHECK(j["kind"] == "flp_experiment");
  CHECK(j["instances"] == 40);
  CHECK(j["params"]["seed"] == 11);
  for (const Json& ce : j["counterexamples"]) {
    Program prog = parse_program(ce["program"].get<std::string>());
    std::vector<std::string> names = ce["witness"].get<std::vector<std::string>>();
    Interpretation witness = Interpretation::from_names(prog.sig(), names);
    std::vector<Interpretation> aft = answer_sets_p(prog, 8);
    std::vector<Interpretation> flp = flp_answer_sets(prog, 8);
    CHECK(std::find(aft.begin(), aft.end(), witness) != aft.end());
    CHECK(std::find(flp.begin(), flp.end(), witness) == flp.end());
  }
}
