#ifndef NLPROG_INTERPRETATION_HPP
#define NLPROG_INTERPRETATION_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "nlprog/signature.hpp"

namespace nlprog {

/// Default bound on exhaustive powerset enumeration (2^20 subsets).
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// A subset of a signature's universe, read as a 0/1 valuation:
/// I(a) = 1 iff a is a member. Immutable value semantics; the mutating
/// members exist for construction and never alias shared state.
class Interpretation {
public:
  explicit Interpretation(SignatureRef sig);
  Interpretation(SignatureRef sig, std::initializer_list<std::string_view> names);

  static Interpretation from_names(SignatureRef sig, const std::vector<std::string>& names);
  static Interpretation full(SignatureRef sig);

  const SignatureRef& sig() const { return sig_; }
  std::size_t universe_size() const { return bits_.size(); }

  bool test(std::size_t index) const { return bits_.test(index); }
  bool contains(std::string_view name) const;
  void insert(std::size_t index) { bits_.set(index); }
  void erase(std::size_t index) { bits_.reset(index); }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Indices of members in universe order.
  std::vector<std::size_t> member_indices() const;
  /// Names of members in universe order.
  std::vector<std::string> member_names() const;

  bool is_subset_of(const Interpretation& other) const;

  Interpretation union_with(const Interpretation& other) const;
  Interpretation intersect_with(const Interpretation& other) const;
  Interpretation minus(const Interpretation& other) const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);

  /// Members in universe order wrapped in braces, e.g. "{a, b}".
  std::string to_string() const;

  /// The raw membership mask; bit i corresponds to universe index i.
  const boost::dynamic_bitset<>& bits() const { return bits_; }

private:
  SignatureRef sig_;
  boost::dynamic_bitset<> bits_;
};

/// Requires both values over equal signatures; throws SignatureMismatchError.
void require_same_signature(const Interpretation& a, const Interpretation& b);
void require_signature(const Interpretation& value, const SignatureRef& sig);

/// Pair (lower, upper) with lower included in upper: true on lower, undefined
/// on the gap, false outside upper.
class ThreeInterpretation {
public:
  ThreeInterpretation(Interpretation lower, Interpretation upper);

  const Interpretation& lower() const { return lower_; }
  const Interpretation& upper() const { return upper_; }

  friend bool operator==(const ThreeInterpretation& a, const ThreeInterpretation& b);

  std::string to_string() const;

private:
  Interpretation lower_;
  Interpretation upper_;
};

/// Precision ordering: p is at most as precise as q iff
/// p.lower ⊆ q.lower and q.upper ⊆ p.upper.
bool precision_leq(const ThreeInterpretation& p, const ThreeInterpretation& q);

/// Calls fn for all 2^n subsets in binary-counting order over the universe
/// order (empty set first, full set last). Throws CapExceededError when the
/// universe is larger than cap.
void for_each_interpretation(const SignatureRef& sig, std::size_t cap,
                             const std::function<void(const Interpretation&)>& fn);

/// Materialized enumeration in the same order.
std::vector<Interpretation> all_interpretations(const SignatureRef& sig,
                                                std::size_t cap = kDefaultEnumerationCap);

/// Calls fn for every 3-interpretation (lower ⊆ upper), enumerating upper in
/// binary-counting order and lower within each upper. 3^n pairs in total.
void for_each_three_interpretation(
    const SignatureRef& sig, std::size_t cap,
    const std::function<void(const ThreeInterpretation&)>& fn);

}  // namespace nlprog

#endif  // NLPROG_INTERPRETATION_HPP
