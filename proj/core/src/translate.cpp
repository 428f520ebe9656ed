#include "nlprog/translate.hpp"

#include <vector>

#include "nlprog/errors.hpp"
#include "nlprog/net_semantics.hpp"
#include "nlprog/program_semantics.hpp"

namespace nlprog {

Program net_to_program(const Net& net) {
  std::vector<NeuralRule> rules;
  rules.reserve(net.size());
  for (std::size_t t = 0; t < net.size(); ++t) {
    std::vector<BodyAtom> body;
    for (const Net::InEdge& e : net.incoming(t)) {
      body.push_back(BodyAtom{e.source, e.weight});
    }
    rules.emplace_back(t, std::move(body));
  }
  return Program::make(net.sig(), std::move(rules));
}

Program ordinary_net_to_ordinary_program(const Net& net) {
  if (!classify(net).ordinary) {
    throw NotOrdinaryError("net is not ordinary");
  }
  return net_to_program(net);
}

Net program_to_net(const Program& prog) { return dependency_graph(prog); }

}  // namespace nlprog
