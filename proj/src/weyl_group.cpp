#include "wonderful/weyl_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace wonderful {

std::size_t default_group_cap() {
  if (const char* env = std::getenv("ORBITS_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

namespace {

void require_same_parent(const WeylElement& a, const WeylElement& b) {
  if (&a.parent() != &b.parent()) throw std::invalid_argument("Weyl group elements belong to different groups");
}

}  // namespace

WeylElement::WeylElement(const RootSystem& roots, std::vector<RootIndex> image)
    : parent_(&roots), image_(std::move(image)), preimage_(image_.size()) {
  for (std::size_t r = 0; r < image_.size(); ++r) preimage_[image_[r]] = static_cast<RootIndex>(r);
  compute_word();
}

void WeylElement::compute_word() {
  // Greedy smallest left descent gives the lexicographically first reduced word.
  word_.clear();
  std::vector<RootIndex> pre = preimage_;
  const int rank = parent_->rank();
  for (;;) {
    SimpleIndex descent = -1;
    for (SimpleIndex i = 0; i < rank; ++i)
      if (!parent_->is_positive(pre[i])) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word_.push_back(descent);
    // (s_i w)^{-1}(r) = w^{-1}(s_i r)
    std::vector<RootIndex> next(pre.size());
    for (std::size_t r = 0; r < pre.size(); ++r) next[r] = pre[parent_->reflect(descent, static_cast<RootIndex>(r))];
    pre.swap(next);
  }
}

WeylElement WeylElement::identity(const RootSystem& roots) {
  std::vector<RootIndex> image(roots.num_roots());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = static_cast<RootIndex>(r);
  return WeylElement(roots, std::move(image));
}

WeylElement WeylElement::simple_reflection(const RootSystem& roots, SimpleIndex i) {
  if (i < 0 || i >= roots.rank()) throw std::out_of_range("simple index out of range");
  std::vector<RootIndex> image(roots.num_roots());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = roots.reflect(i, static_cast<RootIndex>(r));
  return WeylElement(roots, std::move(image));
}

WeylElement WeylElement::from_word(const RootSystem& roots, std::span<const SimpleIndex> word) {
  std::vector<RootIndex> image(roots.num_roots());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = static_cast<RootIndex>(r);
  // w = s_{i1} ... s_{ik}: apply the rightmost letter first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= roots.rank()) throw std::out_of_range("simple index out of range");
    for (auto& img : image) img = roots.reflect(*it, img);
  }
  return WeylElement(roots, std::move(image));
}

std::vector<RootIndex> WeylElement::inversions() const {
  std::vector<RootIndex> out;
  for (std::size_t r = 0; r < parent_->num_positive(); ++r)
    if (!parent_->is_positive(image_[r])) out.push_back(static_cast<RootIndex>(r));
  return out;
}

WeylElement WeylElement::left_multiply(SimpleIndex i) const {
  std::vector<RootIndex> image(image_.size());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = parent_->reflect(i, image_[r]);
  return WeylElement(*parent_, std::move(image));
}

WeylElement WeylElement::right_multiply(SimpleIndex i) const {
  std::vector<RootIndex> image(image_.size());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = image_[parent_->reflect(i, static_cast<RootIndex>(r))];
  return WeylElement(*parent_, std::move(image));
}

WeylElement WeylElement::inverse() const { return WeylElement(*parent_, preimage_); }

std::string WeylElement::to_string() const { return format_word(word_); }

bool operator<(const WeylElement& a, const WeylElement& b) {
  require_same_parent(a, b);
  if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
  return a.word_ < b.word_;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (RootIndex r : image_) h = (h ^ r) * 1099511628211ull;
  return h;
}

std::string format_word(std::span<const SimpleIndex> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

std::vector<SimpleIndex> parse_word(const std::string& text, int rank) {
  std::vector<SimpleIndex> word;
  if (text == "e") return word;
  if (text.empty()) throw std::invalid_argument("empty word (use 'e' for the identity)");
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '.')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + item + "' in word '" + text + "'");
    }
    if (used != item.size() || v < 1 || v > rank)
      throw std::invalid_argument("generator '" + item + "' out of range in word '" + text + "'");
    word.push_back(v - 1);
  }
  if (text.back() == '.') throw std::invalid_argument("trailing '.' in word '" + text + "'");
  return word;
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  require_same_parent(u, v);
  std::vector<RootIndex> image(u.image_.size());
  for (std::size_t r = 0; r < image.size(); ++r) image[r] = u.image_[v.image_[r]];
  return WeylElement(*u.parent_, std::move(image));
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  require_same_parent(u, w);
  if (u.length() > w.length()) return false;
  // The canonical word of w lists successive left descents.
  WeylElement x = u;
  for (SimpleIndex s : w.word())
    if (x.has_left_descent(s)) x = x.left_multiply(s);
  return x.is_identity();
}

WeylElement longest_element(const RootSystem& roots, SimpleSubset J) {
  WeylElement w = WeylElement::identity(roots);
  for (bool grew = true; grew;) {
    grew = false;
    for (SimpleIndex i : J.elements())
      if (!w.has_left_descent(i)) {
        w = w.left_multiply(i);
        grew = true;
      }
  }
  return w;
}

CosetDecomposition coset_decompose(const WeylElement& w, SimpleSubset J) {
  WeylElement min_rep = w;
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (SimpleIndex j : J.elements())
      if (min_rep.has_right_descent(j)) {
        min_rep = min_rep.right_multiply(j);
        shrank = true;
      }
  }
  WeylElement parabolic = multiply(min_rep.inverse(), w);
  return {std::move(min_rep), std::move(parabolic)};
}

bool is_min_coset_rep(const WeylElement& w, SimpleSubset J) {
  for (SimpleIndex j : J.elements())
    if (w.has_right_descent(j)) return false;
  return true;
}

bool in_parabolic(const WeylElement& w, SimpleSubset J) {
  for (SimpleIndex s : w.word())
    if (!J.contains(s)) return false;
  return true;
}

std::vector<WeylElement> enumerate_group(const RootSystem& roots, std::size_t cap) {
  std::vector<WeylElement> all{WeylElement::identity(roots)};
  std::vector<WeylElement> layer = all;
  while (!layer.empty()) {
    std::unordered_set<WeylElement> next_set;
    for (const auto& w : layer)
      for (SimpleIndex i = 0; i < roots.rank(); ++i)
        if (!w.has_left_descent(i)) next_set.insert(w.left_multiply(i));
    std::vector<WeylElement> next(next_set.begin(), next_set.end());
    std::sort(next.begin(), next.end());
    if (all.size() + next.size() > cap)
      throw CapExceeded("Weyl group has more than " + std::to_string(cap) + " elements (group cap, set ORBITS_CAP or --cap)");
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& roots, SimpleSubset J, std::size_t cap) {
  std::vector<WeylElement> out;
  for (auto& w : enumerate_group(roots, cap))
    if (is_min_coset_rep(w, J)) out.push_back(std::move(w));
  return out;
}

ParabolicCase parabolic_trichotomy(const WeylElement& sigma, SimpleSubset J, SimpleIndex alpha) {
  if (!is_min_coset_rep(sigma, J))
    throw std::invalid_argument("parabolic_trichotomy: " + sigma.to_string() + " is not a minimal coset representative");
  const RootSystem& roots = sigma.parent();
  // Deodhar: either s_alpha sigma is in W^J, or sigma^{-1}(alpha) = alpha_beta with beta in J.
  const RootIndex pulled = sigma.apply_inverse(static_cast<RootIndex>(alpha));
  if (roots.is_simple(pulled) && J.contains(pulled)) return {ParabolicCase::Kind::Exchange, pulled};
  if (sigma.has_left_descent(alpha)) return {ParabolicCase::Kind::DescentInWJ};
  return {ParabolicCase::Kind::AscentInWJ};
}

long weighted_length(const WeylElement& w, const WeightFunction& c) {
  long d = 0;
  for (RootIndex r : w.inversions()) d += c(r);
  return d;
}

}  // namespace wonderful
