#pragma once

#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cmarr/error.hpp"

namespace cmarr {

/// Sorted 0-based indices into a configuration. Serialized 1-based.
using IndexSet = std::vector<std::size_t>;

/// A relabelling of {0..k-1}; entry i is the image of i.
using Permutation = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t acc = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::size_t num = n - r + i;
    if (acc > std::numeric_limits<std::size_t>::max() / num)
      raise(ErrorKind::size_limit, "binomial(" + std::to_string(n) + "," + std::to_string(r) +
                                       ") overflows");
    acc = acc * num / i;
  }
  return acc;
}

/// All r-element subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> k_subsets(std::size_t n, std::size_t r) {
  std::vector<IndexSet> out;
  if (r > n) return out;
  out.reserve(binomial(n, r));
  IndexSet cur(r);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline bool is_permutation_of_range(const Permutation& g) {
  std::vector<bool> seen(g.size(), false);
  for (auto v : g) {
    if (v >= g.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace cmarr
