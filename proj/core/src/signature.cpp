#include "nlprog/signature.hpp"

#include <array>
#include <cctype>

#include "nlprog/errors.hpp"

namespace nlprog {

namespace {

constexpr std::array<std::string_view, 4> kReservedNames = {"node", "edge", "fact", "theta"};

bool is_reserved(std::string_view name) {
  for (std::string_view reserved : kReservedNames) {
    if (name == reserved) return true;
  }
  return false;
}

}  // namespace

bool NeuronId::is_valid_name(std::string_view name) {
  if (name.empty() || is_reserved(name)) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

NeuronId::NeuronId(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw ValidationError("invalid neuron name '" + name_ + "'");
  }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Signature::require(std::string_view name) const {
  auto index = index_of(name);
  if (!index) throw UnknownNeuronError(std::string(name));
  return *index;
}

bool same_signature(const SignatureRef& a, const SignatureRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SignatureBuilder& SignatureBuilder::add(NeuronId id, ExtendedRational threshold) {
  if (sig_.index_.contains(id.name())) {
    throw ValidationError("duplicate neuron '" + id.name() + "'");
  }
  sig_.index_.emplace(id.name(), sig_.neurons_.size());
  sig_.neurons_.push_back(std::move(id));
  sig_.thresholds_.push_back(std::move(threshold));
  return *this;
}

SignatureBuilder& SignatureBuilder::add(std::string name, ExtendedRational threshold) {
  return add(NeuronId(std::move(name)), std::move(threshold));
}

bool SignatureBuilder::contains(std::string_view name) const {
  return sig_.index_.contains(std::string(name));
}

SignatureRef SignatureBuilder::build() {
  return std::make_shared<const Signature>(std::move(sig_));
}

}  // namespace nlprog
