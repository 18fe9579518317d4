#include "wonderful/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <string>

namespace wonderful {

namespace {

constexpr int kMaxRank = 16;
constexpr std::size_t kMaxRoots = 20000;

// Bareiss fraction-free determinant.
long long determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string index_list(std::uint32_t mask) {
  return to_string(SimpleSubset::from_mask(mask));
}

void validate_cartan(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n > kMaxRank) throw RootSystemError("rank " + std::to_string(n) + " exceeds supported maximum 16");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw RootSystemError("Cartan matrix is not square");
    if (a[i][i] != 2) throw RootSystemError("Cartan matrix diagonal entry " + std::to_string(i + 1) + " is not 2");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        throw RootSystemError("Cartan matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is positive");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw RootSystemError("Cartan matrix entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") and its transpose disagree on vanishing");
    }
  // Finite type <=> every principal minor is positive.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
    const long long det = determinant(sub);
    if (det <= 0)
      throw RootSystemError("Cartan matrix is not of finite type: principal minor on " + index_list(mask) + " is " +
                            std::to_string(det) + " (positivity test failed)");
  }
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem::RootSystem(Token, IntMatrix cartan, const std::set<SimpleIndex>& marks)
    : rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)) {
  validate_cartan(cartan_);

  // Positive roots: close the simple roots under simple reflections that stay positive.
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < rank_; ++i) {
    RootVector e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * beta[j];
      RootVector gamma = beta;
      gamma[i] -= pairing;
      if (gamma[i] < 0) continue;
      if (seen.insert(gamma).second) {
        if (seen.size() > kMaxRoots) throw RootSystemError("root enumeration did not terminate");
        queue.push_back(std::move(gamma));
      }
    }
  }
  reduced_positive_.assign(seen.begin(), seen.end());
  std::sort(reduced_positive_.begin(), reduced_positive_.end(), [](const RootVector& x, const RootVector& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  const std::size_t n_pos = reduced_positive_.size();
  for (std::size_t r = 0; r < n_pos; ++r) lookup_[reduced_positive_[r]] = static_cast<RootIndex>(r);
  for (std::size_t r = 0; r < n_pos; ++r) {
    RootVector neg = reduced_positive_[r];
    for (int& c : neg) c = -c;
    lookup_[neg] = static_cast<RootIndex>(r + n_pos);
  }

  reflect_.assign(rank_, std::vector<RootIndex>(2 * n_pos));
  for (int i = 0; i < rank_; ++i)
    for (std::size_t r = 0; r < 2 * n_pos; ++r) {
      RootVector beta = root(static_cast<RootIndex>(r));
      int pairing = 0;
      for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * beta[j];
      beta[i] -= pairing;
      auto it = lookup_.find(beta);
      if (it == lookup_.end()) throw RootSystemError("root set is not closed under simple reflections");
      reflect_[i][r] = it->second;
    }

  orbit_.assign(2 * n_pos, -1);
  for (std::size_t start = 0; start < 2 * n_pos; ++start) {
    if (orbit_[start] >= 0) continue;
    std::deque<RootIndex> q{static_cast<RootIndex>(start)};
    orbit_[start] = num_orbits_;
    while (!q.empty()) {
      RootIndex r = q.front();
      q.pop_front();
      for (int i = 0; i < rank_; ++i) {
        RootIndex s = reflect_[i][r];
        if (orbit_[s] < 0) {
          orbit_[s] = num_orbits_;
          q.push_back(s);
        }
      }
    }
    ++num_orbits_;
  }

  positive_roots_ = reduced_positive_;
  for (SimpleIndex m : marks) {
    if (m < 0 || m >= rank_)
      throw RootSystemError("non-reduced mark " + std::to_string(m + 1) + " is not a simple index");
    for (int j = 0; j < rank_; ++j)
      if (j != m && cartan_[m][j] % 2 != 0)
        throw RootSystemError("simple root " + std::to_string(m + 1) +
                              " cannot be doubled: <alpha^vee, alpha_" + std::to_string(j + 1) + "> is odd");
    for (std::size_t r = 0; r < n_pos; ++r) {
      if (orbit_[r] != orbit_[m] || doubled_.count(static_cast<RootIndex>(r))) continue;
      RootVector twice = reduced_positive_[r];
      for (int& c : twice) c *= 2;
      doubled_[static_cast<RootIndex>(r)] = twice;
      positive_roots_.push_back(std::move(twice));
    }
  }
}

std::shared_ptr<const RootSystem> RootSystem::build(IntMatrix cartan, const std::set<SimpleIndex>& marks) {
  return std::make_shared<const RootSystem>(Token{}, std::move(cartan), marks);
}

RootVector RootSystem::root(RootIndex r) const {
  const std::size_t n = num_positive();
  if (r < n) return reduced_positive_[r];
  RootVector v = reduced_positive_[r - n];
  for (int& c : v) c = -c;
  return v;
}

std::optional<RootIndex> RootSystem::find(const RootVector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

namespace {

IntMatrix chain(int n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

IntMatrix simple_type(char family, int n) {
  auto bad = [&] { return RootSystemError(std::string("unsupported type ") + family + std::to_string(n)); };
  switch (family) {
    case 'A':
      if (n < 0) throw bad();
      return chain(n);
    case 'B': {
      if (n < 2) throw bad();
      IntMatrix a = chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      return a;
    }
    case 'C': {
      if (n < 2) throw bad();
      IntMatrix a = chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      return a;
    }
    case 'D': {
      if (n < 3) throw bad();
      IntMatrix a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4.
      IntMatrix a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) throw bad();
      IntMatrix a = chain(4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      return a;
    }
    case 'G': {
      if (n != 2) throw bad();
      return {{2, -3}, {-1, 2}};  // alpha_1 short
    }
    default:
      throw bad();
  }
}

}  // namespace

IntMatrix cartan_of_type(const std::string& name) {
  std::vector<IntMatrix> blocks;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t end = name.find('x', pos);
    if (end == std::string::npos) end = name.size();
    std::string part = name.substr(pos, end - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
      throw RootSystemError("cannot parse group type '" + name + "'");
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(part.substr(1), &used);
    } catch (const std::exception&) {
      throw RootSystemError("cannot parse group type '" + name + "'");
    }
    if (used != part.size() - 1) throw RootSystemError("cannot parse group type '" + name + "'");
    blocks.push_back(simple_type(part[0], n));
    pos = end + 1;
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  IntMatrix a(total, std::vector<int>(total, 0));
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[offset + i][offset + j] = b[i][j];
    offset += b.size();
  }
  return a;
}

}  // namespace wonderful
