#include "wonderful/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wonderful {

SimpleSubset SimpleSubset::of(std::initializer_list<SimpleIndex> indices) {
  return of(std::vector<SimpleIndex>(indices));
}

SimpleSubset SimpleSubset::of(const std::vector<SimpleIndex>& indices) {
  SimpleSubset s;
  for (SimpleIndex i : indices) {
    if (i < 0 || i >= 32) throw std::out_of_range("simple index out of range");
    s = s.with(i);
  }
  return s;
}

std::vector<SimpleIndex> SimpleSubset::elements() const {
  std::vector<SimpleIndex> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string to_string(SimpleSubset s) {
  std::string out = "[";
  bool first = true;
  for (SimpleIndex i : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += ']';
  return out;
}

SimpleSubset parse_subset(const std::string& text, int rank) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("subset must be written as [i,j,...]: '" + text + "'");
  SimpleSubset s;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return s;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset entry '" + item + "'");
    }
    if (used != item.size() || v < 1 || v > rank)
      throw std::invalid_argument("subset entry out of range: '" + item + "'");
    if (s.contains(v - 1)) throw std::invalid_argument("repeated subset entry '" + item + "'");
    s = s.with(v - 1);
  }
  return s;
}

bool stratum_order_less(SimpleSubset a, SimpleSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

std::vector<SimpleSubset> all_subsets(int rank) {
  std::vector<SimpleSubset> out;
  out.reserve(std::size_t{1} << rank);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << rank); ++m) out.push_back(SimpleSubset::from_mask(m));
  std::sort(out.begin(), out.end(), stratum_order_less);
  return out;
}

}  // namespace wonderful
