#pragma once

/**
 * @file maps.hpp
 * @brief The subset maps chi_t, oplus_t, Theta_t, the pullback check and the
 *        stabilization map S.
 *
 * chi_t sends (z_1..z_k) to the unordered t-tuples [z_I] over all t-subsets I
 * in lexicographic order; a tuple is represented by its points sorted by
 * (re, im). oplus_t adds a tuple up, and Theta_t = oplus_t applied entrywise
 * to chi_t, i.e. the vector of C(k,t) subset sums.
 *
 * S appends the point (L, 0) with L = 2t (1 + max_i (|re x_i| + |im x_i|)).
 * The 1-norm dominates the Euclidean norm, so L is never smaller than the
 * offset built from Euclidean norms, and it stays rational.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cmarr/combinatorics.hpp"
#include "cmarr/configuration.hpp"
#include "cmarr/error.hpp"
#include "cmarr/rational.hpp"

namespace cmarr {

struct ChiEntry {
  IndexSet subset;
  std::vector<GaussianRational> tuple;  // sorted by (re, im)
};

struct ThetaEntry {
  IndexSet subset;
  GaussianRational value;
};

using ChiImage = std::vector<ChiEntry>;
using ThetaImage = std::vector<ThetaEntry>;

namespace detail {

inline void require_subset_size(std::size_t t, std::size_t k) {
  if (t < 1 || t > k)
    raise(ErrorKind::parameter, "subset maps need 1 <= t <= k (t=" + std::to_string(t) +
                                    ", k=" + std::to_string(k) + ")");
}

}  // namespace detail

inline ChiImage chi(std::size_t t, const Configuration& c) {
  detail::require_subset_size(t, c.size());
  ChiImage out;
  for (auto& subset : k_subsets(c.size(), t)) {
    std::vector<GaussianRational> tuple;
    tuple.reserve(t);
    for (auto i : subset) tuple.push_back(c[i]);
    std::sort(tuple.begin(), tuple.end());
    out.push_back({std::move(subset), std::move(tuple)});
  }
  return out;
}

inline GaussianRational oplus(std::span<const GaussianRational> tuple) {
  GaussianRational acc;
  for (const auto& z : tuple) acc += z;
  return acc;
}

inline ThetaImage theta(std::size_t t, const Configuration& c) {
  detail::require_subset_size(t, c.size());
  ThetaImage out;
  for (auto& subset : k_subsets(c.size(), t)) {
    GaussianRational v = subset_sum(c, subset);
    out.push_back({std::move(subset), std::move(v)});
  }
  return out;
}

/// Result of checking one configuration against the pullback square.
/// Route A: the configuration is in Conf(C,k) and Theta_t lands in
/// Conf(C, C(k,t)). Route B: the definitional subset-pair check for M(t,k).
struct PullbackReport {
  bool theta_route = true;
  bool definitional_route = true;
  std::optional<std::pair<std::size_t, std::size_t>> conf_collision;
  std::optional<std::pair<IndexSet, IndexSet>> theta_collision;
  std::optional<CollisionWitness> definitional_witness;

  bool agree() const noexcept { return theta_route == definitional_route; }
};

inline PullbackReport verify_pullback(std::size_t t, const Configuration& c) {
  detail::require_subset_size(t, c.size());
  PullbackReport report;

  const auto conf = in_conf(c);
  report.conf_collision = conf.collision;
  const auto image = theta(t, c);
  std::vector<GaussianRational> values;
  values.reserve(image.size());
  for (const auto& e : image) values.push_back(e.value);
  if (auto hit = detail::least_equal_pair(values))
    report.theta_collision = std::make_pair(image[hit->first].subset, image[hit->second].subset);
  report.theta_route = conf.distinct && !report.theta_collision;

  const auto definitional = in_M_by_pair_scan(t, c);
  report.definitional_route = definitional.member;
  report.definitional_witness = definitional.witness;
  return report;
}

inline Rational stabilization_offset(std::size_t t, const Configuration& c) {
  if (t < 1) raise(ErrorKind::parameter, "t must be at least 1");
  Rational largest(0);
  for (const auto& z : c.points()) largest = std::max(largest, z.l1_norm());
  return Rational(2 * static_cast<long long>(t)) * (Rational(1) + largest);
}

/// S(x_1..x_k) = (x_1..x_k, (L, 0)). Defined for every input; it lands in
/// M'(t, k+1) when the input lies in M'(t, k).
inline Configuration stabilize(std::size_t t, const Configuration& c) {
  std::vector<GaussianRational> out = c.points();
  out.emplace_back(stabilization_offset(t, c), Rational(0));
  return Configuration(std::move(out));
}

}  // namespace cmarr
