#ifndef NLPROG_TRANSLATE_HPP
#define NLPROG_TRANSLATE_HPP

#include "nlprog/net.hpp"
#include "nlprog/program.hpp"

namespace nlprog {

/// The minimalist program with one rule per neuron: the body of the neuron
/// becomes the rule body with the same weights. Shares the signature object.
Program net_to_program(const Net& net);

/// As net_to_program, restricted to ordinary nets; the result is an ordinary
/// program. Raises NotOrdinaryError otherwise.
Program ordinary_net_to_ordinary_program(const Net& net);

/// The dependency graph of a minimalist program as a validated net. Shares
/// the signature object when every neuron occurs in the program.
Net program_to_net(const Program& prog);

}  // namespace nlprog

#endif  // NLPROG_TRANSLATE_HPP
