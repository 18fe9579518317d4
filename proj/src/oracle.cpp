#include "wonderful/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace wonderful {

namespace {

// Lexicographically largest reduced word: peel the largest left descent.
std::vector<SimpleIndex> largest_word(const CoxeterTable& table, ElementId w) {
  std::vector<SimpleIndex> word;
  while (w != CoxeterTable::identity()) {
    const std::uint32_t descents = table.left_descents(w);
    SimpleIndex s = 31 - __builtin_clz(descents);
    word.push_back(s);
    w = table.left(s, w);
  }
  return word;
}

std::vector<SimpleIndex> reduced_word(const CoxeterTable& table, ElementId w, ExpressionChoice choice) {
  if (choice == ExpressionChoice::ShortLex) return table.element(w).word();
  return largest_word(table, w);
}

}  // namespace

OrbitLabel replay(const OrbitCalculus& calc, const OrbitLabel& start, const std::vector<MoveStep>& moves) {
  OrbitLabel current = start;
  for (const MoveStep& m : moves) current = calc.rank1_act(current, m.side, m.alpha);
  return current;
}

OrbitLabel minimal_orbit(const OrbitCalculus& calc, SimpleSubset J) {
  const CoxeterTable& g = calc.group();
  const ElementId w0 = g.longest();
  return calc.canonicalize(J, w0, g.multiply(w0, g.longest(J)));
}

MoveTrace move_trace(const OrbitCalculus& calc, const OrbitLabel& target, ExpressionChoice choice) {
  const CoxeterTable& g = calc.group();
  const SimpleSubset J = target.stratum;
  const ElementId w0 = g.longest();
  // Left moves multiply sigma rho on the left, right moves multiply tau on the left.
  const ElementId left_part = g.multiply(g.multiply(target.sigma, target.rho), w0);
  const ElementId right_part = g.multiply(g.multiply(target.tau, g.longest(J)), w0);
  const auto left_word = reduced_word(g, left_part, choice);
  const auto right_word = reduced_word(g, right_part, choice);

  std::vector<MoveStep> left_moves, right_moves;
  for (auto it = left_word.rbegin(); it != left_word.rend(); ++it) left_moves.push_back({Side::Left, *it});
  for (auto it = right_word.rbegin(); it != right_word.rend(); ++it) right_moves.push_back({Side::Right, *it});

  MoveTrace trace{minimal_orbit(calc, J), {}, target};
  const auto& first = choice == ExpressionChoice::ShortLex ? left_moves : right_moves;
  const auto& second = choice == ExpressionChoice::ShortLex ? right_moves : left_moves;
  trace.moves = first;
  trace.moves.insert(trace.moves.end(), second.begin(), second.end());

  const OrbitLabel reached = replay(calc, trace.start, trace.moves);
  if (reached != target)
    throw std::logic_error("move sequence from the minimal orbit reaches " + calc.format(reached) +
                           " instead of " + calc.format(target));
  return trace;
}

std::vector<OrbitLabel> subword_closure_same_stratum(const OrbitCalculus& calc, const OrbitLabel& target,
                                                     ExpressionChoice choice) {
  const MoveTrace trace = move_trace(calc, target, choice);
  std::vector<OrbitLabel> reached{trace.start};
  Bitset seen(calc.orbit_count());
  seen.set(calc.index_of(trace.start));
  for (const MoveStep& m : trace.moves) {
    const std::size_t count = reached.size();
    for (std::size_t k = 0; k < count; ++k) {
      const OrbitLabel next = calc.rank1_act(reached[k], m.side, m.alpha);
      const std::size_t idx = calc.index_of(next);
      if (!seen.test(idx)) {
        seen.set(idx);
        reached.push_back(next);
      }
    }
  }
  std::sort(reached.begin(), reached.end(), [&](const OrbitLabel& a, const OrbitLabel& b) {
    return calc.index_of(a) < calc.index_of(b);
  });
  return reached;
}

ClosurePoset oracle_poset(const OrbitCalculus& calc, ExpressionChoice choice) {
  if (calc.orbit_count() > calc.caps().poset_orbits)
    throw CapExceeded("oracle poset needs " + std::to_string(calc.orbit_count()) + " labels (cap " +
                      std::to_string(calc.caps().poset_orbits) + ")");
  std::vector<OrbitLabel> labels = calc.enumerate_orbits();
  const auto n = static_cast<std::ptrdiff_t>(labels.size());
  std::vector<Bitset> below(labels.size(), Bitset(labels.size()));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const OrbitLabel& o = labels[j];
    for (const OrbitLabel& lower : subword_closure_same_stratum(calc, o, choice)) below[j].set(calc.index_of(lower));
    for (SimpleIndex s : o.stratum.elements())
      for (const OrbitLabel& c : calc.intersection_components(o, o.stratum.without(s)))
        below[j].set(calc.index_of(c));
  }
  transitive_closure(below);
  return make_poset(std::move(labels), std::move(below));
}

PosetDiff compare_posets(const ClosurePoset& first, const ClosurePoset& second) {
  if (first.labels != second.labels) throw std::invalid_argument("posets have different label universes");
  PosetDiff diff;
  for (std::size_t j = 0; j < first.size(); ++j) {
    const Bitset a = first.below[j] - second.below[j];
    const Bitset b = second.below[j] - first.below[j];
    for (auto i = a.find_first(); i != Bitset::npos; i = a.find_next(i)) diff.only_first.emplace_back(i, j);
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) diff.only_second.emplace_back(i, j);
  }
  return diff;
}

std::vector<bool> subword_products(const CoxeterTable& table, ElementId w) {
  const std::vector<SimpleIndex>& word = table.element(w).word();
  if (word.size() > 30) throw std::invalid_argument("subword search limited to words of length 30");
  std::vector<bool> hit(table.size(), false);
  const std::uint64_t subsets = std::uint64_t{1} << word.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ElementId x = CoxeterTable::identity();
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1u) x = table.right(x, word[k]);
    hit[x] = true;
  }
  return hit;
}

bool subword_bruhat_leq(const CoxeterTable& table, ElementId u, ElementId w) {
  return subword_products(table, w)[u];
}

}  // namespace wonderful
