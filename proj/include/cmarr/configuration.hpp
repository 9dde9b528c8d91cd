#pragma once

/**
 * @file configuration.hpp
 * @brief Exact membership in Conf(C,k), M(t,k) and M'(t,k).
 *
 * A configuration lies in M(t,k) iff its C(k,t) subset sums are pairwise
 * distinct. Sums are bucketed by exact value; the witness reported on failure
 * is the lexicographically least colliding pair (left, right), the same pair a
 * quadratic scan over subset pairs in lexicographic order stops at.
 *
 * Repeated points are legal input; predicates answer false with a witness.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmarr/combinatorics.hpp"
#include "cmarr/error.hpp"
#include "cmarr/linalg.hpp"
#include "cmarr/rational.hpp"

namespace cmarr {

class Configuration {
 public:
  explicit Configuration(std::vector<GaussianRational> points) : points_(std::move(points)) {
    if (points_.empty()) raise(ErrorKind::parameter, "a configuration needs at least one point");
  }
  Configuration(std::initializer_list<GaussianRational> points)
      : Configuration(std::vector<GaussianRational>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  const GaussianRational& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<GaussianRational>& points() const noexcept { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<GaussianRational> points_;
};

/// Two distinct index sets of size s with equal point sums.
struct CollisionWitness {
  std::size_t s = 0;
  IndexSet left;
  IndexSet right;
  GaussianRational common_value;

  friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

struct Membership {
  bool member = true;
  std::optional<CollisionWitness> witness;

  explicit operator bool() const noexcept { return member; }
};

inline GaussianRational subset_sum(const Configuration& c, const IndexSet& subset) {
  GaussianRational acc;
  for (auto i : subset) {
    if (i >= c.size()) raise(ErrorKind::parameter, "subset index out of range");
    acc += c[i];
  }
  return acc;
}

inline GaussianRational centroid(const Configuration& c, const IndexSet& subset) {
  if (subset.empty()) raise(ErrorKind::parameter, "centroid of an empty subset");
  return subset_sum(c, subset) / Rational(static_cast<long long>(subset.size()));
}

namespace detail {

/// Least pair of positions (a, b), a < b, holding equal values.
inline std::optional<std::pair<std::size_t, std::size_t>> least_equal_pair(
    std::span<const GaussianRational> values) {
  std::map<GaussianRational, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < values.size(); ++i) buckets[values[i]].push_back(i);
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& [value, members] : buckets) {
    if (members.size() < 2) continue;
    std::pair<std::size_t, std::size_t> cand{members[0], members[1]};
    if (!best || cand < *best) best = cand;
  }
  return best;
}

}  // namespace detail

struct ConfMembership {
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> collision;  // least (i, j), i < j

  explicit operator bool() const noexcept { return distinct; }
};

inline ConfMembership in_conf(const Configuration& c) {
  auto pair = detail::least_equal_pair(c.points());
  return {!pair.has_value(), pair};
}

/// Membership in M(t,k). For k <= t this is Conf(C,k) and a failure is
/// reported as a size-1 witness.
inline Membership in_M(std::size_t t, const Configuration& c) {
  if (t < 1) raise(ErrorKind::parameter, "t must be at least 1");
  const std::size_t k = c.size();
  if (k <= t) {
    auto conf = in_conf(c);
    if (conf) return {};
    const auto [i, j] = *conf.collision;
    return {false, CollisionWitness{1, {i}, {j}, c[i]}};
  }
  const auto subsets = k_subsets(k, t);
  std::vector<GaussianRational> sums;
  sums.reserve(subsets.size());
  for (const auto& s : subsets) sums.push_back(subset_sum(c, s));
  auto pair = detail::least_equal_pair(sums);
  if (!pair) return {};
  return {false, CollisionWitness{t, subsets[pair->first], subsets[pair->second], sums[pair->first]}};
}

/// Quadratic scan over subset pairs in lexicographic order. Shares no code
/// with the bucketing route; kept as the definitional check.
inline Membership in_M_by_pair_scan(std::size_t t, const Configuration& c) {
  if (t < 1) raise(ErrorKind::parameter, "t must be at least 1");
  const std::size_t k = c.size();
  if (k <= t) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (c[i] == c[j]) return {false, CollisionWitness{1, {i}, {j}, c[i]}};
    return {};
  }
  std::vector<IndexSet> all;
  auto gen = [&](auto&& self, IndexSet& cur, std::size_t start) -> void {
    if (cur.size() == t) {
      all.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (t - cur.size()) <= k; ++i) {
      cur.push_back(i);
      self(self, cur, i + 1);
      cur.pop_back();
    }
  };
  IndexSet cur;
  gen(gen, cur, 0);
  for (std::size_t a = 0; a < all.size(); ++a) {
    GaussianRational sa;
    for (auto i : all[a]) sa += c[i];
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      GaussianRational sb;
      for (auto i : all[b]) sb += c[i];
      if (sa == sb) return {false, CollisionWitness{t, all[a], all[b], sa}};
    }
  }
  return {};
}

/// Membership in M'(t,k) = intersection of M(s,k) for s = 1..t; the witness
/// comes from the smallest failing s.
inline Membership in_M_prime(std::size_t t, const Configuration& c) {
  if (t < 1) raise(ErrorKind::parameter, "t must be at least 1");
  for (std::size_t s = 1; s <= t; ++s) {
    auto m = in_M(s, c);
    if (!m) return m;
    if (s >= c.size()) break;  // every larger s is Conf again
  }
  return {};
}

inline Membership membership(std::size_t t, const Configuration& c, bool modified) {
  return modified ? in_M_prime(t, c) : in_M(t, c);
}

/// Disjoint index pairs {i,j}, {u,v} with x_i + x_j = x_u + x_v, i.e. the four
/// points are the vertices of a possibly degenerate parallelogram.
struct Parallelogram {
  std::array<std::size_t, 2> first;
  std::array<std::size_t, 2> second;

  friend bool operator==(const Parallelogram&, const Parallelogram&) = default;
  friend auto operator<=>(const Parallelogram&, const Parallelogram&) = default;
};

/// Buckets the C(k,2) pair sums by exact value and returns the least disjoint
/// colliding pair of pairs. Pairs sharing an index collide only through a
/// repeated point and are skipped.
inline std::optional<Parallelogram> find_parallelogram(const Configuration& c) {
  const std::size_t k = c.size();
  std::map<GaussianRational, std::vector<std::array<std::size_t, 2>>> buckets;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) buckets[c[i] + c[j]].push_back({i, j});
  std::optional<Parallelogram> best;
  for (const auto& [sum, pairs] : buckets) {
    if (pairs.size() < 2) continue;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      if (best && pairs[a] > best->first) break;
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        const auto& p = pairs[a];
        const auto& q = pairs[b];
        if (p[0] == q[0] || p[0] == q[1] || p[1] == q[0] || p[1] == q[1]) continue;
        Parallelogram cand{p, q};
        if (!best || cand < *best) best = cand;
        break;
      }
    }
  }
  return best;
}

/// Output point i is input point g[i].
inline Configuration permute(const Configuration& c, const Permutation& g) {
  if (g.size() != c.size() || !is_permutation_of_range(g))
    raise(ErrorKind::parameter, "permutation is not a bijection of {1..k}");
  std::vector<GaussianRational> out;
  out.reserve(c.size());
  for (auto gi : g) out.push_back(c[gi]);
  return Configuration(std::move(out));
}

inline Configuration translate(const Configuration& c, const GaussianRational& shift) {
  std::vector<GaussianRational> out;
  out.reserve(c.size());
  for (const auto& z : c.points()) out.push_back(z + shift);
  return Configuration(std::move(out));
}

/// Value of the linear form at the configuration.
inline GaussianRational evaluate(const IntCovector& form, const Configuration& c) {
  if (form.size() != c.size()) raise(ErrorKind::parameter, "covector length differs from k");
  GaussianRational acc;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (form[i] != 0) acc += Rational(form[i]) * c[i];
  return acc;
}

}  // namespace cmarr
