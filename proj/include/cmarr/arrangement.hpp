#pragma once

/**
 * @file arrangement.hpp
 * @brief Defining hyperplanes of the center-of-mass arrangements.
 *
 * For t-subsets I and J of {1..k} the centroids agree exactly on the kernel of
 * sum_{i in I} x_i - sum_{j in J} x_j (the 1/t factor does not change the
 * hyperplane). Overlapping indices cancel, so every normal has entries in
 * {-1, 0, 1} and coefficient sum 0.
 *
 * When k <= t there is at most one t-subset; those cases are defined to be the
 * braid arrangement {x_i = x_j}, i.e. the complement is Conf(C, k).
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "cmarr/combinatorics.hpp"
#include "cmarr/error.hpp"
#include "cmarr/linalg.hpp"

namespace cmarr {

/// Unordered pair of distinct equal-size index sets, stored with
/// left < right lexicographically.
struct SubsetPair {
  IndexSet left;
  IndexSet right;

  static SubsetPair make(IndexSet a, IndexSet b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() != b.size() || a.empty())
      raise(ErrorKind::parameter, "subset pair needs two nonempty sets of equal size");
    if (std::adjacent_find(a.begin(), a.end()) != a.end() ||
        std::adjacent_find(b.begin(), b.end()) != b.end())
      raise(ErrorKind::parameter, "subset pair has a repeated index");
    if (a == b) raise(ErrorKind::parameter, "subset pair needs two different sets");
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }

  std::size_t size() const noexcept { return left.size(); }

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
  friend auto operator<=>(const SubsetPair& a, const SubsetPair& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    if (a.left != b.left) return a.left < b.left ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    if (a.right != b.right) return a.right < b.right ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// Every unordered pair of distinct t-subsets of {0..k-1}, in lexicographic
/// order of (left, right).
inline std::vector<SubsetPair> enumerate_subset_pairs(std::size_t t, std::size_t k) {
  if (t < 1 || t > k)
    raise(ErrorKind::parameter, "subset pairs need 1 <= t <= k (t=" + std::to_string(t) +
                                    ", k=" + std::to_string(k) + ")");
  const auto subsets = k_subsets(k, t);
  std::vector<SubsetPair> out;
  out.reserve(binomial(subsets.size(), 2));
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) out.push_back({subsets[a], subsets[b]});
  return out;
}

inline IntCovector covector_of_pair(const SubsetPair& p, std::size_t k) {
  std::vector<BigInt> v(k, 0);
  for (auto i : p.left) {
    if (i >= k) raise(ErrorKind::parameter, "subset index out of range");
    v[i] += 1;
  }
  for (auto j : p.right) {
    if (j >= k) raise(ErrorKind::parameter, "subset index out of range");
    v[j] -= 1;
  }
  return IntCovector::canonicalize(std::span<const BigInt>(v));
}

struct Hyperplane {
  IntCovector normal;
  std::vector<SubsetPair> generators;  // sorted, every pair whose form spans `normal`
};

enum class ArrangementKind { single_t, modified_up_to_t };

inline std::string_view to_string(ArrangementKind kind) {
  return kind == ArrangementKind::single_t ? "single-t" : "modified-up-to-t";
}

struct Arrangement {
  std::size_t t = 1;
  std::size_t k = 1;
  ArrangementKind kind = ArrangementKind::single_t;
  std::vector<Hyperplane> hyperplanes;  // sorted by normal, normals unique

  std::size_t size() const noexcept { return hyperplanes.size(); }

  std::vector<IntCovector> normals() const {
    std::vector<IntCovector> out;
    out.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) out.push_back(h.normal);
    return out;
  }

  bool contains(const IntCovector& normal) const {
    auto it = std::lower_bound(
        hyperplanes.begin(), hyperplanes.end(), normal,
        [](const Hyperplane& h, const IntCovector& n) { return h.normal < n; });
    return it != hyperplanes.end() && it->normal == normal;
  }
};

namespace detail {

inline void add_pairs(std::map<IntCovector, std::vector<SubsetPair>>& by_normal,
                      const std::vector<SubsetPair>& pairs, std::size_t k) {
  for (const auto& p : pairs) by_normal[covector_of_pair(p, k)].push_back(p);
}

inline std::vector<Hyperplane> collect(std::map<IntCovector, std::vector<SubsetPair>> by_normal) {
  std::vector<Hyperplane> out;
  out.reserve(by_normal.size());
  for (auto& [normal, gens] : by_normal) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.push_back({normal, std::move(gens)});
  }
  return out;
}

inline void add_single(std::map<IntCovector, std::vector<SubsetPair>>& by_normal,
                       std::size_t t, std::size_t k) {
  if (k <= t) {
    if (k >= 2) add_pairs(by_normal, enumerate_subset_pairs(1, k), k);
  } else {
    add_pairs(by_normal, enumerate_subset_pairs(t, k), k);
  }
}

}  // namespace detail

/// Hyperplanes whose complement is M(t, k). For k <= t this is the braid
/// arrangement, recorded with singleton generator pairs.
inline Arrangement build_arrangement(std::size_t t, std::size_t k) {
  if (t < 1 || k < 1) raise(ErrorKind::parameter, "arrangement needs t >= 1 and k >= 1");
  std::map<IntCovector, std::vector<SubsetPair>> by_normal;
  detail::add_single(by_normal, t, k);
  return {t, k, ArrangementKind::single_t, detail::collect(std::move(by_normal))};
}

/// Union of build_arrangement(s, k) over s = 1..min(t, k); the complement is
/// M'(t, k), the intersection of the M(s, k).
inline Arrangement build_modified_arrangement(std::size_t t, std::size_t k) {
  if (t < 1 || k < 1) raise(ErrorKind::parameter, "arrangement needs t >= 1 and k >= 1");
  std::map<IntCovector, std::vector<SubsetPair>> by_normal;
  for (std::size_t s = 1; s <= std::min(t, k); ++s) detail::add_single(by_normal, s, k);
  return {t, k, ArrangementKind::modified_up_to_t, detail::collect(std::move(by_normal))};
}

inline Arrangement build(std::size_t t, std::size_t k, bool modified) {
  return modified ? build_modified_arrangement(t, k) : build_arrangement(t, k);
}

}  // namespace cmarr
