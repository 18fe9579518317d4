#include "wonderful/orbit_model.hpp"

#include <algorithm>
#include <sstream>

namespace wonderful {

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

OrbitCalculus::OrbitCalculus(std::shared_ptr<const RootSystem> roots, Caps caps)
    : OrbitCalculus(roots, WeightFunction(*roots), caps) {}

OrbitCalculus::OrbitCalculus(std::shared_ptr<const RootSystem> roots, WeightFunction weights, Caps caps)
    : table_(std::move(roots), caps.group), weights_(std::move(weights)), caps_(caps) {
  if (weights_.values().size() != table_.roots().num_positive())
    throw std::invalid_argument("weight function belongs to a different root system");
  const std::size_t n = table_.size();
  d_.resize(n);
  for (std::size_t w = 0; w < n; ++w) d_[w] = wonderful::weighted_length(table_.element(w), weights_);

  const std::size_t subsets = std::size_t{1} << rank();
  parabolic_.resize(subsets);
  min_reps_.resize(subsets);
  parabolic_pos_.assign(subsets, std::vector<std::int32_t>(n, -1));
  min_rep_pos_.assign(subsets, std::vector<std::int32_t>(n, -1));
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const auto J = SimpleSubset::from_mask(static_cast<std::uint32_t>(mask));
    for (ElementId w = 0; w < n; ++w) {
      if (table_.in_parabolic(w, J)) {
        parabolic_pos_[mask][w] = static_cast<std::int32_t>(parabolic_[mask].size());
        parabolic_[mask].push_back(w);
      }
      if (table_.is_min_coset_rep(w, J)) {
        min_rep_pos_[mask][w] = static_cast<std::int32_t>(min_reps_[mask].size());
        min_reps_[mask].push_back(w);
      }
    }
  }

  strata_ = all_subsets(rank());
  offset_.assign(subsets, 0);
  for (SimpleSubset J : strata_) {
    offset_[J.mask()] = total_;
    total_ += stratum_size(J);
  }
}

std::size_t OrbitCalculus::stratum_size(SimpleSubset J) const {
  const std::size_t reps = min_reps_[J.mask()].size();
  return reps * reps * parabolic_[J.mask()].size();
}

std::vector<OrbitLabel> OrbitCalculus::enumerate_orbits(std::optional<SimpleSubset> J) const {
  const std::size_t count = J ? stratum_size(*J) : total_;
  if (count > caps_.orbits)
    throw CapExceeded("orbit enumeration would produce " + std::to_string(count) + " labels (cap " +
                      std::to_string(caps_.orbits) + ")");
  std::vector<OrbitLabel> out;
  out.reserve(count);
  for (SimpleSubset I : strata_) {
    if (J && I != *J) continue;
    for (ElementId sigma : min_reps_[I.mask()])
      for (ElementId tau : min_reps_[I.mask()])
        for (ElementId rho : parabolic_[I.mask()]) out.push_back({I, sigma, tau, rho});
  }
  return out;
}

std::size_t OrbitCalculus::index_of(const OrbitLabel& o) const {
  const auto m = o.stratum.mask();
  const std::size_t reps = min_reps_[m].size();
  const std::size_t par = parabolic_[m].size();
  return offset_[m] + (static_cast<std::size_t>(min_rep_pos_[m][o.sigma]) * reps + min_rep_pos_[m][o.tau]) * par +
         parabolic_pos_[m][o.rho];
}

OrbitLabel OrbitCalculus::label_at(std::size_t index) const {
  if (index >= total_) throw std::out_of_range("orbit index out of range");
  SimpleSubset I = strata_.front();
  for (SimpleSubset J : strata_) {
    if (offset_[J.mask()] > index) break;
    if (stratum_size(J) > 0) I = J;
  }
  const auto m = I.mask();
  std::size_t local = index - offset_[m];
  const std::size_t reps = min_reps_[m].size();
  const std::size_t par = parabolic_[m].size();
  const ElementId rho = parabolic_[m][local % par];
  local /= par;
  const ElementId tau = min_reps_[m][local % reps];
  const ElementId sigma = min_reps_[m][local / reps];
  return {I, sigma, tau, rho};
}

bool OrbitCalculus::is_valid(const OrbitLabel& o) const {
  if (!o.stratum.is_subset_of(all_simple())) return false;
  const std::size_t n = table_.size();
  if (o.sigma >= n || o.tau >= n || o.rho >= n) return false;
  return table_.is_min_coset_rep(o.sigma, o.stratum) && table_.is_min_coset_rep(o.tau, o.stratum) &&
         table_.in_parabolic(o.rho, o.stratum);
}

OrbitLabel OrbitCalculus::canonicalize(SimpleSubset I, ElementId x, ElementId y) const {
  const auto [tau, y_par] = table_.coset_decompose(y, I);
  const ElementId shifted = table_.multiply(x, table_.inverse(y_par));
  const auto [sigma, rho] = table_.coset_decompose(shifted, I);
  return {I, sigma, tau, rho};
}

long OrbitCalculus::codim(const OrbitLabel& o) const { return d_[o.sigma] + d_[o.tau] + d_[o.rho]; }

bool OrbitCalculus::is_split_model() const { return weights_.is_unit() && roots().is_reduced(); }

void OrbitCalculus::require_split_model(const char* what) const {
  if (!weights_.is_unit())
    throw std::domain_error(std::string(what) + " is defined for the split model only (unit weights)");
  if (!roots().is_reduced())
    throw std::domain_error(std::string(what) + " is defined for the split model only (reduced root system)");
}

long OrbitCalculus::split_dimension(const OrbitLabel& o) const {
  require_split_model("split_dimension");
  const long n_pos = static_cast<long>(roots().num_positive());
  return 2 * n_pos - table_.length(o.sigma) - table_.length(o.rho) - table_.length(o.tau) + o.stratum.size();
}

IntPolynomial OrbitCalculus::point_count_poly(const OrbitLabel& o) const {
  require_split_model("point_count_poly");
  const int n_pos = static_cast<int>(roots().num_positive());
  const int exponent = 2 * n_pos - table_.length(o.sigma) - table_.length(o.rho) - table_.length(o.tau);
  return IntPolynomial::monomial(exponent) * pow(IntPolynomial({-1, 1}), o.stratum.size());
}

OrbitLabel OrbitCalculus::rank1_act(const OrbitLabel& o, Side side, SimpleIndex alpha) const {
  using Kind = ParabolicCase::Kind;
  if (side == Side::Left) {
    const ParabolicCase c = table_.trichotomy(o.sigma, o.stratum, alpha);
    if (c.kind == Kind::DescentInWJ) return {o.stratum, table_.left(alpha, o.sigma), o.tau, o.rho};
    if (c.kind == Kind::Exchange && (table_.left_descents(o.rho) >> c.beta & 1u))
      return {o.stratum, o.sigma, o.tau, table_.left(c.beta, o.rho)};
    return o;
  }
  const ParabolicCase c = table_.trichotomy(o.tau, o.stratum, alpha);
  if (c.kind == Kind::DescentInWJ) return {o.stratum, o.sigma, table_.left(alpha, o.tau), o.rho};
  if (c.kind == Kind::Exchange && (table_.right_descents(o.rho) >> c.beta & 1u))
    return {o.stratum, o.sigma, o.tau, table_.right(o.rho, c.beta)};
  return o;
}

bool OrbitCalculus::is_stable(const OrbitLabel& o, Side side, SimpleIndex alpha) const {
  // Left: l(s_alpha sigma rho) > l(sigma rho); Right: l(s_alpha tau rho^{-1}) > l(tau rho^{-1}).
  const ElementId w = side == Side::Left ? table_.multiply(o.sigma, o.rho)
                                         : table_.multiply(o.tau, table_.inverse(o.rho));
  return !(table_.left_descents(w) >> alpha & 1u);
}

OrbitLabel OrbitCalculus::unique_predecessor(const OrbitLabel& o, Side side, SimpleIndex alpha) const {
  using Kind = ParabolicCase::Kind;
  const ElementId moved = side == Side::Left ? o.sigma : o.tau;
  const ParabolicCase c = table_.trichotomy(moved, o.stratum, alpha);
  const std::string where = format(o) + " under " + to_string(side) + " " + std::to_string(alpha + 1);
  switch (c.kind) {
    case Kind::AscentInWJ:
      if (side == Side::Left) return {o.stratum, table_.left(alpha, o.sigma), o.tau, o.rho};
      return {o.stratum, o.sigma, table_.left(alpha, o.tau), o.rho};
    case Kind::Exchange:
      if (side == Side::Left) {
        if (!(table_.left_descents(o.rho) >> c.beta & 1u))
          return {o.stratum, o.sigma, o.tau, table_.left(c.beta, o.rho)};
      } else if (!(table_.right_descents(o.rho) >> c.beta & 1u)) {
        return {o.stratum, o.sigma, o.tau, table_.right(o.rho, c.beta)};
      }
      throw UnstableLabel("unstable: " + where + " exchanges with beta=" + std::to_string(c.beta + 1) +
                          " and rho has beta as a descent");
    case Kind::DescentInWJ:
      break;
  }
  throw UnstableLabel("unstable: " + where + " is a descent inside W^I");
}

bool OrbitCalculus::closure_leq_same_stratum(const OrbitLabel& a, const OrbitLabel& b) const {
  if (a.stratum != b.stratum) throw std::invalid_argument("closure_leq_same_stratum: labels lie in different strata");
  const ElementId x1 = table_.multiply(a.sigma, a.rho);
  const ElementId x2 = table_.multiply(b.sigma, b.rho);
  for (ElementId u : parabolic(a.stratum))
    if (table_.bruhat_leq(x2, table_.multiply(x1, u)) &&
        table_.bruhat_leq(table_.multiply(b.tau, table_.inverse(u)), a.tau))
      return true;
  return false;
}

std::optional<ClosureWitness> OrbitCalculus::closure_witness(const OrbitLabel& a, const OrbitLabel& b) const {
  if (!a.stratum.is_subset_of(b.stratum)) return std::nullopt;
  const ElementId x1 = table_.multiply(a.sigma, a.rho);
  const ElementId x2 = table_.multiply(b.sigma, b.rho);
  const int rho2_len = table_.length(b.rho);
  for (ElementId v : parabolic(b.stratum)) {
    if (!table_.is_min_coset_rep(v, a.stratum)) continue;
    if (table_.length(table_.multiply(b.rho, v)) + table_.length(v) != rho2_len) continue;
    const ElementId lower_left = table_.multiply(x2, v);
    const ElementId lower_right = table_.multiply(b.tau, v);
    for (ElementId u : parabolic(a.stratum))
      if (table_.bruhat_leq(lower_left, table_.multiply(x1, u)) &&
          table_.bruhat_leq(table_.multiply(lower_right, table_.inverse(u)), a.tau))
        return ClosureWitness{u, v};
  }
  return std::nullopt;
}

std::vector<OrbitLabel> OrbitCalculus::intersection_components(const OrbitLabel& o, SimpleSubset I) const {
  std::vector<OrbitLabel> out;
  if (!I.is_subset_of(o.stratum)) return out;
  const ElementId x = table_.multiply(o.sigma, o.rho);
  for (ElementId v : parabolic(o.stratum)) {
    if (!table_.is_min_coset_rep(v, I)) continue;
    const ElementId xv = table_.multiply(x, v);
    if (table_.length(xv) + table_.length(v) != table_.length(x)) continue;
    const OrbitLabel c = canonicalize(I, xv, table_.multiply(o.tau, v));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

std::string OrbitCalculus::format(const OrbitLabel& o) const {
  return "I=" + to_string(o.stratum) + ";sigma=" + table_.word_string(o.sigma) + ";tau=" +
         table_.word_string(o.tau) + ";rho=" + table_.word_string(o.rho);
}

OrbitLabel OrbitCalculus::parse(std::string_view text) const {
  static constexpr const char* keys[] = {"I", "sigma", "tau", "rho"};
  std::vector<std::string> values;
  std::stringstream in{std::string(text)};
  std::string field;
  while (std::getline(in, field, ';')) {
    const std::size_t k = values.size();
    if (k >= 4) throw LabelError("label has more than four fields: '" + std::string(text) + "'");
    const std::string prefix = std::string(keys[k]) + "=";
    if (field.rfind(prefix, 0) != 0)
      throw LabelError("expected field '" + prefix + "' in label '" + std::string(text) + "'");
    values.push_back(field.substr(prefix.size()));
  }
  if (values.size() != 4) throw LabelError("label must have fields I, sigma, tau, rho: '" + std::string(text) + "'");

  SimpleSubset I;
  ElementId parts[3];
  try {
    I = parse_subset(values[0], rank());
    for (int k = 0; k < 3; ++k) parts[k] = table_.from_word(parse_word(values[k + 1], rank()));
  } catch (const std::invalid_argument& e) {
    throw LabelError(e.what());
  }
  const OrbitLabel given{I, parts[0], parts[1], parts[2]};
  const bool words_canonical = table_.word_string(parts[0]) == values[1] &&
                               table_.word_string(parts[1]) == values[2] &&
                               table_.word_string(parts[2]) == values[3];
  if (!words_canonical || !is_valid(given)) {
    const OrbitLabel canonical = canonicalize(I, table_.multiply(parts[0], parts[2]), parts[1]);
    throw LabelError("label '" + std::string(text) + "' is not canonical", format(canonical));
  }
  return given;
}

}  // namespace wonderful
