#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wonderful/root_system.hpp"
#include "wonderful/weights.hpp"

namespace wonderful {

/// Thrown when a computation would enumerate more group elements or orbits than allowed.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default bound on |W| for anything that enumerates the group; the
/// ORBITS_CAP environment variable overrides it.
std::size_t default_group_cap();

/// Element of the Weyl group of a root system, stored as its permutation of
/// the roots together with its ShortLex-minimal reduced word.
///
/// The parent RootSystem must outlive the element. Operations that combine
/// two elements throw std::invalid_argument when the parents differ.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& roots);
  static WeylElement simple_reflection(const RootSystem& roots, SimpleIndex i);
  /// Product of the simple reflections in `word`; the word need not be reduced.
  static WeylElement from_word(const RootSystem& roots, std::span<const SimpleIndex> word);

  const RootSystem& parent() const { return *parent_; }
  std::size_t length() const { return word_.size(); }
  /// Canonical (ShortLex-minimal) reduced word.
  const std::vector<SimpleIndex>& word() const { return word_; }
  /// Positive roots sent to negative roots.
  std::vector<RootIndex> inversions() const;
  bool is_identity() const { return word_.empty(); }

  RootIndex apply(RootIndex r) const { return image_[r]; }
  RootIndex apply_inverse(RootIndex r) const { return preimage_[r]; }
  /// l(s_i w) < l(w)
  bool has_left_descent(SimpleIndex i) const { return !parent_->is_positive(preimage_[i]); }
  /// l(w s_i) < l(w)
  bool has_right_descent(SimpleIndex i) const { return !parent_->is_positive(image_[i]); }

  WeylElement left_multiply(SimpleIndex i) const;   // s_i w
  WeylElement right_multiply(SimpleIndex i) const;  // w s_i
  WeylElement inverse() const;

  /// "1.2.1" with 1-based generators, "e" for the identity.
  std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.parent_ == b.parent_ && a.image_ == b.image_;
  }
  /// ShortLex order on canonical words.
  friend bool operator<(const WeylElement& a, const WeylElement& b);

  std::size_t hash() const;

 private:
  WeylElement(const RootSystem& roots, std::vector<RootIndex> image);
  void compute_word();

  const RootSystem* parent_ = nullptr;
  std::vector<RootIndex> image_;
  std::vector<RootIndex> preimage_;
  std::vector<SimpleIndex> word_;

  friend WeylElement multiply(const WeylElement&, const WeylElement&);
};

/// Serializes a word as dot-separated 1-based generators ("e" when empty).
std::string format_word(std::span<const SimpleIndex> word);
/// Inverse of format_word. Throws std::invalid_argument.
std::vector<SimpleIndex> parse_word(const std::string& text, int rank);

WeylElement multiply(const WeylElement& u, const WeylElement& v);

/// Bruhat order u <= w, by the descent recursion: for a left descent s of w,
/// u <= w iff min(u, su) <= sw.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// Longest element of the parabolic subgroup W_J.
WeylElement longest_element(const RootSystem& roots, SimpleSubset J);

struct CosetDecomposition {
  WeylElement min_rep;    // in W^J
  WeylElement parabolic;  // in W_J
};
/// w = min_rep * parabolic with l(w) = l(min_rep) + l(parabolic).
CosetDecomposition coset_decompose(const WeylElement& w, SimpleSubset J);

/// w in W^J, i.e. w(alpha_j) > 0 for every j in J.
bool is_min_coset_rep(const WeylElement& w, SimpleSubset J);
/// w in W_J.
bool in_parabolic(const WeylElement& w, SimpleSubset J);

/// All of W in ShortLex order. Throws CapExceeded when |W| > cap.
std::vector<WeylElement> enumerate_group(const RootSystem& roots, std::size_t cap = default_group_cap());

/// W^J in ShortLex order.
std::vector<WeylElement> min_coset_reps(const RootSystem& roots, SimpleSubset J,
                                        std::size_t cap = default_group_cap());

/// How s_alpha moves a minimal coset representative sigma in W^J.
struct ParabolicCase {
  enum class Kind {
    DescentInWJ,  // s_alpha sigma in W^J, shorter
    AscentInWJ,   // s_alpha sigma in W^J, longer
    Exchange,     // s_alpha sigma = sigma s_beta with beta in J, longer
  };
  Kind kind;
  SimpleIndex beta = -1;  // set for Exchange

  friend bool operator==(const ParabolicCase&, const ParabolicCase&) = default;
};

/// Throws std::invalid_argument when sigma is not in W^J.
ParabolicCase parabolic_trichotomy(const WeylElement& sigma, SimpleSubset J, SimpleIndex alpha);

/// d(w): sum of the weights of the non-divisible positive roots sent negative by w.
long weighted_length(const WeylElement& w, const WeightFunction& c);

}  // namespace wonderful

template <>
struct std::hash<wonderful::WeylElement> {
  std::size_t operator()(const wonderful::WeylElement& w) const noexcept { return w.hash(); }
};
