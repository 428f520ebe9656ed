#ifndef NLPROG_ERRORS_HPP
#define NLPROG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlprog {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A net or program violates a construction invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Two values that must share a signature do not.
class SignatureMismatchError : public Error {
public:
  SignatureMismatchError() : Error("operands are defined over different signatures") {}
  using Error::Error;
};

/// A neuron name or id is not part of the signature.
class UnknownNeuronError : public Error {
public:
  explicit UnknownNeuronError(const std::string& name)
      : Error("unknown neuron '" + name + "'") {}
};

/// An exhaustive enumeration was requested over a universe larger than the cap.
class CapExceededError : public Error {
public:
  CapExceededError(std::size_t universe_size, std::size_t cap)
      : Error("enumeration over " + std::to_string(universe_size) +
              " neurons exceeds the cap of " + std::to_string(cap)),
        universe_size(universe_size),
        cap(cap) {}

  std::size_t universe_size;
  std::size_t cap;
};

class NotPositiveError : public Error {
public:
  using Error::Error;
};

class NotAcyclicError : public Error {
public:
  using Error::Error;
};

class NotMinimalistError : public Error {
public:
  explicit NotMinimalistError(const std::string& head)
      : Error("program is not minimalist: multiple rules for head '" + head + "'"),
        head(head) {}

  std::string head;
};

class NotOrdinaryError : public Error {
public:
  using Error::Error;
};

/// Kleene iteration observed a step that shrinks the set, which a monotone
/// operator cannot produce on the chain from the empty interpretation.
class NonMonotoneError : public Error {
public:
  using Error::Error;
};

/// The stable-revision iteration produced a value outside [empty, upper].
class IterationEscapedSublatticeError : public Error {
public:
  using Error::Error;
};

/// feed_forward received an input activating neurons outside the input layer.
class InputOutsideInputLayerError : public Error {
public:
  using Error::Error;
};

/// Random-instance parameters that cannot produce a valid instance.
class InfeasibleParamsError : public Error {
public:
  using Error::Error;
};

}  // namespace nlprog

#endif  // NLPROG_ERRORS_HPP
