#include "nlprog/interpretation.hpp"

#include "nlprog/errors.hpp"

namespace nlprog {

Interpretation::Interpretation(SignatureRef sig)
    : sig_(std::move(sig)), bits_(sig_->size()) {}

Interpretation::Interpretation(SignatureRef sig, std::initializer_list<std::string_view> names)
    : Interpretation(std::move(sig)) {
  for (std::string_view name : names) insert(sig_->require(name));
}

Interpretation Interpretation::from_names(SignatureRef sig,
                                          const std::vector<std::string>& names) {
  Interpretation result(std::move(sig));
  for (const std::string& name : names) result.insert(result.sig_->require(name));
  return result;
}

Interpretation Interpretation::full(SignatureRef sig) {
  Interpretation result(std::move(sig));
  result.bits_.set();
  return result;
}

bool Interpretation::contains(std::string_view name) const {
  auto index = sig_->index_of(name);
  return index && bits_.test(*index);
}

std::vector<std::size_t> Interpretation::member_indices() const {
  std::vector<std::size_t> indices;
  indices.reserve(bits_.count());
  for (std::size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i)) {
    indices.push_back(i);
  }
  return indices;
}

std::vector<std::string> Interpretation::member_names() const {
  std::vector<std::string> names;
  names.reserve(bits_.count());
  for (std::size_t i : member_indices()) names.push_back(sig_->neuron(i).name());
  return names;
}

bool Interpretation::is_subset_of(const Interpretation& other) const {
  require_same_signature(*this, other);
  return bits_.is_subset_of(other.bits_);
}

Interpretation Interpretation::union_with(const Interpretation& other) const {
  require_same_signature(*this, other);
  Interpretation result = *this;
  result.bits_ |= other.bits_;
  return result;
}

Interpretation Interpretation::intersect_with(const Interpretation& other) const {
  require_same_signature(*this, other);
  Interpretation result = *this;
  result.bits_ &= other.bits_;
  return result;
}

Interpretation Interpretation::minus(const Interpretation& other) const {
  require_same_signature(*this, other);
  Interpretation result = *this;
  result.bits_ -= other.bits_;
  return result;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  require_same_signature(a, b);
  return a.bits_ == b.bits_;
}

std::string Interpretation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : member_indices()) {
    if (!first) out += ", ";
    out += sig_->neuron(i).name();
    first = false;
  }
  out += "}";
  return out;
}

void require_same_signature(const Interpretation& a, const Interpretation& b) {
  if (!same_signature(a.sig(), b.sig())) throw SignatureMismatchError();
}

void require_signature(const Interpretation& value, const SignatureRef& sig) {
  if (!same_signature(value.sig(), sig)) throw SignatureMismatchError();
}

ThreeInterpretation::ThreeInterpretation(Interpretation lower, Interpretation upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_signature(lower_, upper_);
  if (!lower_.bits().is_subset_of(upper_.bits())) {
    throw ValidationError("lower bound is not a subset of the upper bound");
  }
}

bool operator==(const ThreeInterpretation& a, const ThreeInterpretation& b) {
  return a.lower_ == b.lower_ && a.upper_ == b.upper_;
}

std::string ThreeInterpretation::to_string() const {
  return "(" + lower_.to_string() + ", " + upper_.to_string() + ")";
}

bool precision_leq(const ThreeInterpretation& p, const ThreeInterpretation& q) {
  require_same_signature(p.lower(), q.lower());
  return p.lower().bits().is_subset_of(q.lower().bits()) &&
         q.upper().bits().is_subset_of(p.upper().bits());
}

namespace {

void check_cap(const SignatureRef& sig, std::size_t cap) {
  if (sig->size() > cap) throw CapExceededError(sig->size(), cap);
}

}  // namespace

void for_each_interpretation(const SignatureRef& sig, std::size_t cap,
                             const std::function<void(const Interpretation&)>& fn) {
  check_cap(sig, cap);
  const std::size_t n = sig->size();
  Interpretation current(sig);
  while (true) {
    fn(current);
    // Binary increment over the membership mask; finished after the full set.
    std::size_t i = 0;
    while (i < n && current.test(i)) {
      current.erase(i);
      ++i;
    }
    if (i == n) return;
    current.insert(i);
  }
}

std::vector<Interpretation> all_interpretations(const SignatureRef& sig, std::size_t cap) {
  std::vector<Interpretation> result;
  for_each_interpretation(sig, cap,
                          [&](const Interpretation& i) { result.push_back(i); });
  return result;
}

void for_each_three_interpretation(
    const SignatureRef& sig, std::size_t cap,
    const std::function<void(const ThreeInterpretation&)>& fn) {
  for_each_interpretation(sig, cap, [&](const Interpretation& upper) {
    const std::vector<std::size_t> members = upper.member_indices();
    const std::size_t k = members.size();
    for (std::uint64_t mask = 0;; ++mask) {
      Interpretation lower(sig);
      for (std::size_t bit = 0; bit < k; ++bit) {
        if (mask & (std::uint64_t{1} << bit)) lower.insert(members[bit]);
      }
      fn(ThreeInterpretation(std::move(lower), upper));
      if (mask + 1 == (std::uint64_t{1} << k)) break;
    }
  });
}

}  // namespace nlprog
