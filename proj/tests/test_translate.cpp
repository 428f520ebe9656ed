#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlprog/errors.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/oracle.hpp"
#include "nlprog/program_semantics.hpp"
#include "nlprog/translate.hpp"
#include "support.hpp"

using namespace nlprog;
using nlprog::tests::interp;

TEST_CASE("net_to_program emits one rule per neuron with the body weights") {
  const Net net = tests::n1();
  Program p = net_to_program(net);
  CHECK(p.sig() == net.sig());
  REQUIRE(p.rules().size() == 3);
  CHECK(classify(p).minimalist);
  CHECK(p.facts() == net.facts());

  const NeuralRule& rule_b = p.rules_for(1).front();
  REQUIRE(rule_b.body().size() == 1);
  CHECK(rule_b.body()[0].neuron == 0);
  CHECK(rule_b.body()[0].weight == Rational(1));

  const NeuralRule& rule_c = p.rules_for(2).front();
  REQUIRE(rule_c.body().size() == 1);
  CHECK(rule_c.body()[0].weight == Rational(-1));
}

TEST_CASE("an acyclic net translates to an acyclic program") {
  const Net net = tests::xor_net();
  CHECK(classify(net_to_program(net)).acyclic);
}

TEST_CASE("a single fact becomes a single fact rule") {
  SignatureBuilder b;
  b.add("a", ExtendedRational::neg_infinity());
  Net net = Net::make(b.build(), {});
  Program p = net_to_program(net);
  REQUIRE(p.rules().size() == 1);
  CHECK(p.rules().front().is_fact());
}

TEST_CASE("the net and its program take identical steps everywhere") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 8};
    params.fact_count = {0, 2};
    params.negative_fraction = 0.35;
    Net net = oracle::random_net(params);
    Program p = net_to_program(net);
    for_each_interpretation(net.sig(), 20, [&](const Interpretation& i) {
      CHECK(t_n(net, i) == t_p(p, i));
    });
  }
}

TEST_CASE("the net and its program have the same fitting operator") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 6};
    params.fact_count = {0, 2};
    params.negative_fraction = 0.35;
    Net net = oracle::random_net(params);
    Program p = net_to_program(net);
    for_each_three_interpretation(net.sig(), 20, [&](const ThreeInterpretation& bounds) {
      CHECK(fitting(net, bounds) == fitting_p(p, bounds));
    });
  }
}

TEST_CASE("the net and its program share supported models and answer sets") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 6};
    params.fact_count = {0, 2};
    params.negative_fraction = 0.35;
    Net net = oracle::random_net(params);
    Program p = net_to_program(net);
    CHECK(supported_models(net) == supported_models_p(p));
    CHECK(answer_sets(net) == answer_sets_p(p));
  }
}

TEST_CASE("positive nets and their programs share the least model") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 7};
    params.fact_count = {1, 2};
    params.negative_fraction = 0.0;
    Net net = oracle::random_net(params);
    CHECK(least_model(net) == least_model_p(net_to_program(net)));
  }
}

TEST_CASE("ordinary nets admit the classical reading") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 7};
    params.fact_count = {0, 2};
    Net net = oracle::random_ordinary_net(params);
    REQUIRE(classify(net).ordinary);
    Program weighted = net_to_program(net);
    Program ordinary = ordinary_net_to_ordinary_program(net);
    CHECK(classify(ordinary).ordinary);
    for_each_interpretation(net.sig(), 20, [&](const Interpretation& i) {
      CHECK(t_p(weighted, i) == t_p_classical(ordinary, i));
    });
  }
}

TEST_CASE("the ordinary translation rejects non-ordinary nets") {
  CHECK_THROWS_AS(ordinary_net_to_ordinary_program(tests::n1()), NotOrdinaryError);
}

TEST_CASE("translating back recovers the original net") {
  const Net n1 = tests::n1();
  CHECK(program_to_net(net_to_program(n1)) == n1);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    oracle::GenParams params;
    params.seed = seed;
    params.neuron_count = {2, 8};
    params.fact_count = {0, 2};
    params.negative_fraction = 0.35;
    Net net = oracle::random_net(params);
    CHECK(program_to_net(net_to_program(net)) == net);
  }
}

TEST_CASE("translation preserves the layer structure") {
  const Net net = tests::xor_net();
  Program p = net_to_program(net);
  Net back = program_to_net(p);
  CHECK(layers(net).layers() == layers(back).layers());
  CHECK(program_layers(p) == layers(net).layers());
}
