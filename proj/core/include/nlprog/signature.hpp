#ifndef NLPROG_SIGNATURE_HPP
#define NLPROG_SIGNATURE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nlprog/rational.hpp"

namespace nlprog {

/// Name of a neuron: a token starting with a letter, continuing with letters,
/// digits and underscores. The names "node", "edge", "fact" and "theta" are
/// reserved by the text formats. Two ids are equal iff their names are equal.
class NeuronId {
public:
  explicit NeuronId(std::string name);

  const std::string& name() const { return name_; }

  static bool is_valid_name(std::string_view name);

  friend bool operator==(const NeuronId& a, const NeuronId& b) = default;
  friend auto operator<=>(const NeuronId& a, const NeuronId& b) = default;

private:
  std::string name_;
};

/// An ordered finite universe of neurons together with a total threshold map.
/// The order is the declaration order of the source the signature came from.
/// Immutable; shared between the values built over it.
class Signature {
public:
  std::size_t size() const { return neurons_.size(); }
  const std::vector<NeuronId>& universe() const { return neurons_; }

  const NeuronId& neuron(std::size_t index) const { return neurons_[index]; }
  const ExtendedRational& threshold(std::size_t index) const { return thresholds_[index]; }

  /// Index of a neuron by name, if present.
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Index of a neuron by name; throws UnknownNeuronError if absent.
  std::size_t require(std::string_view name) const;

  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.neurons_ == b.neurons_ && a.thresholds_ == b.thresholds_;
  }

private:
  friend class SignatureBuilder;
  Signature() = default;

  std::vector<NeuronId> neurons_;
  std::vector<ExtendedRational> thresholds_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SignatureRef = std::shared_ptr<const Signature>;

/// True when both refs point at the same signature or at equal signatures.
bool same_signature(const SignatureRef& a, const SignatureRef& b);

class SignatureBuilder {
public:
  /// Appends a neuron; declaration order becomes universe order.
  /// Throws ValidationError on duplicate names.
  SignatureBuilder& add(NeuronId id, ExtendedRational threshold);
  SignatureBuilder& add(std::string name, ExtendedRational threshold);

  bool contains(std::string_view name) const;
  std::size_t size() const { return sig_.neurons_.size(); }

  SignatureRef build();

private:
  Signature sig_;
};

}  // namespace nlprog

#endif  // NLPROG_SIGNATURE_HPP
