#include "wonderful/coxeter_table.hpp"

#include <stdexcept>

namespace wonderful {

namespace {
constexpr std::size_t kProductTableLimit = 4096;
constexpr std::size_t kBruhatTableLimit = 8192;
}  // namespace

CoxeterTable::CoxeterTable(std::shared_ptr<const RootSystem> roots, std::size_t cap)
    : roots_(std::move(roots)), elements_(enumerate_group(*roots_, cap)) {
  const std::size_t n = elements_.size();
  const int rank = roots_->rank();
  index_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) index_.emplace(elements_[k], static_cast<ElementId>(k));

  length_.resize(n);
  inverse_.resize(n);
  left_descents_.assign(n, 0);
  right_descents_.assign(n, 0);
  support_.assign(n, 0);
  left_.assign(rank, std::vector<ElementId>(n));
  right_.assign(rank, std::vector<ElementId>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const WeylElement& w = elements_[k];
    length_[k] = static_cast<int>(w.length());
    inverse_[k] = id_of(w.inverse());
    for (SimpleIndex s : w.word()) support_[k] |= 1u << s;
    for (SimpleIndex i = 0; i < rank; ++i) {
      if (w.has_left_descent(i)) left_descents_[k] |= 1u << i;
      if (w.has_right_descent(i)) right_descents_[k] |= 1u << i;
      left_[i][k] = id_of(w.left_multiply(i));
      right_[i][k] = id_of(w.right_multiply(i));
    }
  }

  if (n <= kProductTableLimit) {
    product_.resize(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      product_[u * n] = static_cast<ElementId>(u);
      // ShortLex order: v = v' s with v' shorter, so v' was filled already.
      for (std::size_t v = 1; v < n; ++v) {
        const SimpleIndex last = elements_[v].word().back();
        const ElementId prefix = right_[last][v];
        product_[u * n + v] = right_[last][product_[u * n + prefix]];
      }
    }
  }

  if (n <= kBruhatTableLimit) {
    // [e, w] = [e, w'] u s[e, w'] for w = s w' with l(w) = l(w') + 1.
    lower_.assign(n, boost::dynamic_bitset<std::uint64_t>(n));
    lower_[0].set(0);
    for (std::size_t w = 1; w < n; ++w) {
      const SimpleIndex s = elements_[w].word().front();
      const ElementId shorter = left_[s][w];
      lower_[w] = lower_[shorter];
      for (auto u = lower_[shorter].find_first(); u != boost::dynamic_bitset<std::uint64_t>::npos;
           u = lower_[shorter].find_next(u))
        lower_[w].set(left_[s][u]);
    }
  }
}

ElementId CoxeterTable::id_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end() || &w.parent() != roots_.get())
    throw std::invalid_argument("element does not belong to this group");
  return it->second;
}

ElementId CoxeterTable::from_word(std::span<const SimpleIndex> word) const {
  ElementId w = identity();
  for (SimpleIndex s : word) {
    if (s < 0 || s >= rank()) throw std::out_of_range("simple index out of range");
    w = right_[s][w];
  }
  return w;
}

ElementId CoxeterTable::longest(SimpleSubset J) const {
  ElementId w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (SimpleIndex i : J.elements())
      if (!(left_descents_[w] >> i & 1u)) {
        w = left_[i][w];
        grew = true;
      }
  }
  return w;
}

ElementId CoxeterTable::multiply(ElementId u, ElementId v) const {
  if (!product_.empty()) return product_[static_cast<std::size_t>(u) * elements_.size() + v];
  for (SimpleIndex s : elements_[v].word()) u = right_[s][u];
  return u;
}

bool CoxeterTable::bruhat_leq(ElementId u, ElementId w) const {
  if (length_[u] > length_[w]) return false;
  if (!lower_.empty()) return lower_[w].test(u);
  for (SimpleIndex s : elements_[w].word())
    if (left_descents_[u] >> s & 1u) u = left_[s][u];
  return u == identity();
}

CoxeterTable::Decomposition CoxeterTable::coset_decompose(ElementId w, SimpleSubset J) const {
  ElementId rep = w;
  while (std::uint32_t d = right_descents_[rep] & J.mask()) rep = right_[std::countr_zero(d)][rep];
  return {rep, multiply(inverse_[rep], w)};
}

ParabolicCase CoxeterTable::trichotomy(ElementId sigma, SimpleSubset J, SimpleIndex alpha) const {
  return parabolic_trichotomy(elements_[sigma], J, alpha);
}

}  // namespace wonderful
