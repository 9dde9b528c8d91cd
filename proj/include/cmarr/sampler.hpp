#pragma once

/**
 * @file sampler.hpp
 * @brief Seeded rejection sampling of rational configurations and exhaustive
 *        grid censuses.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. Bounded draws use rejection on the raw 64-bit words instead of
 * std::uniform_int_distribution, whose algorithm is implementation-defined,
 * so a seed reproduces the same configurations on every toolchain.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmarr/combinatorics.hpp"
#include "cmarr/configuration.hpp"
#include "cmarr/error.hpp"
#include "cmarr/rational.hpp"

namespace cmarr {

inline constexpr std::string_view kGeneratorId = "mt19937_64+rejection-v1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) raise(ErrorKind::parameter, "empty draw range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline Permutation random_permutation(Rng& rng, std::size_t k) {
  Permutation g(k);
  for (std::size_t i = 0; i < k; ++i) g[i] = i;
  for (std::size_t i = k; i > 1; --i) std::swap(g[i - 1], g[rng.below(i)]);
  return g;
}

enum class SampleMode { conf, M, M_prime };

inline std::string_view to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::conf: return "conf";
    case SampleMode::M: return "M";
    case SampleMode::M_prime: return "M_prime";
  }
  return "conf";
}

inline SampleMode parse_sample_mode(std::string_view text) {
  if (text == "conf") return SampleMode::conf;
  if (text == "M") return SampleMode::M;
  if (text == "M_prime") return SampleMode::M_prime;
  raise(ErrorKind::parameter, "unknown sampling mode '" + std::string(text) + "'");
}

struct SamplerSpec {
  std::size_t k = 1;
  std::size_t t = 1;
  SampleMode mode = SampleMode::conf;
  std::uint64_t seed = 0;
  std::int64_t coordinate_bound = 20;  // numerators in [-B, B], denominators in [1, B]
  std::uint64_t max_rejections = 10000;

  void validate() const {
    if (k < 1) raise(ErrorKind::parameter, "sampler needs k >= 1");
    if (t < 1) raise(ErrorKind::parameter, "sampler needs t >= 1");
    if (coordinate_bound < 1) raise(ErrorKind::parameter, "coordinate bound must be >= 1");
    if (max_rejections < 1) raise(ErrorKind::parameter, "max_rejections must be >= 1");
  }
};

inline Rational random_rational(Rng& rng, std::int64_t bound) {
  const std::int64_t num = rng.between(-bound, bound);
  const std::int64_t den = rng.between(1, bound);
  return Rational(BigInt(num), BigInt(den));
}

inline Configuration random_configuration(Rng& rng, std::size_t k, std::int64_t bound) {
  std::vector<GaussianRational> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational re = random_rational(rng, bound);
    Rational im = random_rational(rng, bound);
    pts.emplace_back(std::move(re), std::move(im));
  }
  return Configuration(std::move(pts));
}

inline bool accepts(const SamplerSpec& spec, const Configuration& c) {
  switch (spec.mode) {
    case SampleMode::conf: return in_conf(c).distinct;
    case SampleMode::M: return in_M(spec.t, c).member;
    case SampleMode::M_prime: return in_M_prime(spec.t, c).member;
  }
  return false;
}

/// Sampler with an explicit stream position, for callers that draw
/// incrementally.
class ConfigurationSampler {
 public:
  explicit ConfigurationSampler(SamplerSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {
    spec_.validate();
  }

  const SamplerSpec& spec() const noexcept { return spec_; }

  Configuration next() {
    for (std::uint64_t attempt = 0; attempt < spec_.max_rejections; ++attempt) {
      Configuration c = random_configuration(rng_, spec_.k, spec_.coordinate_bound);
      if (accepts(spec_, c)) return c;
    }
    raise(ErrorKind::exhausted, "no accepted configuration after " +
                                    std::to_string(spec_.max_rejections) + " draws (mode " +
                                    std::string(to_string(spec_.mode)) + ")");
  }

 private:
  SamplerSpec spec_;
  Rng rng_;
};

inline std::vector<Configuration> sample(const SamplerSpec& spec, std::size_t count) {
  if (count < 1) raise(ErrorKind::parameter, "sample count must be >= 1");
  ConfigurationSampler sampler(spec);
  std::vector<Configuration> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

struct Census {
  std::uint64_t total = 0;
  std::uint64_t in_M = 0;
};

inline constexpr std::uint64_t kDefaultCensusCap = 1'000'000;

/// Visits grid^k in lexicographic order of grid positions.
template <typename Visitor>
void for_each_grid_tuple(std::size_t k, std::span<const GaussianRational> grid,
                         std::uint64_t max_tuples, Visitor&& visit) {
  if (grid.empty()) raise(ErrorKind::parameter, "grid must be nonempty");
  if (k < 1) raise(ErrorKind::parameter, "census needs k >= 1");
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (tuples > max_tuples / grid.size())
      raise(ErrorKind::size_limit, "grid census exceeds the cap of " + std::to_string(max_tuples) +
                                       " tuples");
    tuples *= grid.size();
  }
  std::vector<std::size_t> pos(k, 0);
  std::vector<GaussianRational> pts(k, grid[0]);
  while (true) {
    visit(Configuration(pts));
    std::size_t i = k;
    while (i > 0 && pos[i - 1] + 1 == grid.size()) {
      pos[i - 1] = 0;
      pts[i - 1] = grid[0];
      --i;
    }
    if (i == 0) break;
    ++pos[i - 1];
    pts[i - 1] = grid[pos[i - 1]];
  }
}

inline Census grid_census(std::size_t k, std::size_t t, std::span<const GaussianRational> grid,
                          std::uint64_t max_tuples = kDefaultCensusCap) {
  Census census;
  for_each_grid_tuple(k, grid, max_tuples, [&](const Configuration& c) {
    ++census.total;
    if (in_M(t, c)) ++census.in_M;
  });
  return census;
}

}  // namespace cmarr
