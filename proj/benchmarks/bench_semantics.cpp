#include <benchmark/benchmark.h>

#include "nlprog/net_semantics.hpp"
#include "nlprog/oracle.hpp"
#include "nlprog/program_semantics.hpp"
#include "nlprog/textio.hpp"
#include "nlprog/translate.hpp"

using namespace nlprog;

namespace {

oracle::GenParams sized(std::size_t neurons, std::uint64_t seed) {
  oracle::GenParams params;
  params.neuron_count = {neurons, neurons};
  params.fact_count = {1, 2};
  params.negative_fraction = 0.35;
  params.seed = seed;
  return params;
}

void bm_one_step(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 17));
  const Interpretation empty(net.sig());
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_n(net, empty));
  }
}
BENCHMARK(bm_one_step)->Arg(8)->Arg(32)->Arg(128);

void bm_answer_sets(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 23));
  for (auto _ : state) {
    benchmark::DoNotOptimize(answer_sets(net));
  }
}
BENCHMARK(bm_answer_sets)->Arg(6)->Arg(8)->Arg(10);

void bm_fitting(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 29));
  const ThreeInterpretation vague(Interpretation(net.sig()),
                                  Interpretation::full(net.sig()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fitting(net, vague));
  }
}
BENCHMARK(bm_fitting)->Arg(8)->Arg(32)->Arg(128);

void bm_brute_fitting(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 29));
  const ThreeInterpretation vague(Interpretation(net.sig()),
                                  Interpretation::full(net.sig()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_fitting(net, vague));
  }
}
BENCHMARK(bm_brute_fitting)->Arg(8)->Arg(12)->Arg(16);

void bm_parse_serialize(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 31));
  const std::string text = textio::serialize_net(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(textio::serialize_net(textio::parse_net(text)));
  }
}
BENCHMARK(bm_parse_serialize)->Arg(8)->Arg(32)->Arg(128);

void bm_net_to_program_step(benchmark::State& state) {
  const Net net = oracle::random_net(sized(static_cast<std::size_t>(state.range(0)), 37));
  const Program prog = net_to_program(net);
  const Interpretation empty(net.sig());
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_p(prog, empty));
  }
}
BENCHMARK(bm_net_to_program_step)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
