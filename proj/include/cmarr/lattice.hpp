#pragma once

/**
 * @file lattice.hpp
 * @brief Intersection lattice of a central arrangement and its invariants.
 *
 * A flat is stored through the row space of the covectors vanishing on it, in
 * reduced echelon form, which is unique per subspace and serves as the dedup
 * key. Containment of flats is containment of those row spaces; because every
 * flat is spanned by the hyperplanes it lies in, it is decided by comparing
 * the sets of contained hyperplanes.
 *
 * chi(q)  = sum_X mu(X) q^(k - codim X)
 * pi(q)   = sum_X mu(X) (-q)^(codim X)
 * regions = (-1)^k chi(-1), relatively bounded regions = |chi(1)|, both for
 *           the real arrangement cut out by the same integer forms.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cmarr/arrangement.hpp"
#include "cmarr/error.hpp"
#include "cmarr/linalg.hpp"
#include "cmarr/polynomial.hpp"

namespace cmarr {

inline constexpr std::size_t kDefaultMaxFlats = 200000;

struct Flat {
  QMatrix normal_span;               // reduced echelon basis, one row per codimension
  std::vector<std::size_t> pivots;
  std::size_t codim = 0;
  boost::dynamic_bitset<> contained;  // bit h set iff hyperplane h contains the flat

  std::vector<std::size_t> contained_hyperplanes() const {
    std::vector<std::size_t> ids;
    for (auto h = contained.find_first(); h != boost::dynamic_bitset<>::npos;
         h = contained.find_next(h))
      ids.push_back(h);
    return ids;
  }

  /// Echelon rows scaled to primitive integer vectors.
  std::vector<std::vector<BigInt>> integer_rows() const {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : normal_span.rows()) rows.push_back(primitive_integer_row(r));
    return rows;
  }
};

class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t ambient_dimension, std::size_t hyperplane_count,
                      std::vector<Flat> flats, std::vector<BigInt> mobius,
                      std::vector<std::vector<std::size_t>> parents)
      : ambient_dimension_(ambient_dimension),
        hyperplane_count_(hyperplane_count),
        flats_(std::move(flats)),
        mobius_(std::move(mobius)),
        parents_(std::move(parents)) {}

  std::size_t ambient_dimension() const noexcept { return ambient_dimension_; }
  std::size_t hyperplane_count() const noexcept { return hyperplane_count_; }
  std::size_t size() const noexcept { return flats_.size(); }

  /// Flats ordered by codimension, then by their integer echelon rows. Index 0
  /// is the ambient space.
  const std::vector<Flat>& flats() const noexcept { return flats_; }
  const Flat& flat(std::size_t i) const { return flats_[i]; }
  const BigInt& mobius(std::size_t i) const { return mobius_[i]; }
  const std::vector<BigInt>& mobius() const noexcept { return mobius_; }

  /// Flats of codimension one less that contain flat i.
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }

  std::size_t rank() const noexcept { return flats_.empty() ? 0 : flats_.back().codim; }

  /// Y <= X in the lattice order, i.e. X is contained in Y.
  bool below(std::size_t y, std::size_t x) const {
    return flats_[y].contained.is_subset_of(flats_[x].contained);
  }

  std::vector<std::size_t> flats_by_codim() const {
    std::vector<std::size_t> counts(rank() + 1, 0);
    for (const auto& f : flats_) ++counts[f.codim];
    return counts;
  }

 private:
  std::size_t ambient_dimension_;
  std::size_t hyperplane_count_;
  std::vector<Flat> flats_;
  std::vector<BigInt> mobius_;
  std::vector<std::vector<std::size_t>> parents_;
};

/// Breadth-first closure from the ambient space: each flat of codimension r
/// is cut by every hyperplane not containing it. Throws
/// ErrorKind::size_limit once more than `max_flats` flats exist.
inline IntersectionLattice build_lattice(std::span<const IntCovector> normals,
                                         std::size_t dimension,
                                         std::size_t max_flats = kDefaultMaxFlats) {
  const std::size_t n = normals.size();
  std::vector<std::vector<Rational>> forms;
  forms.reserve(n);
  for (const auto& h : normals) {
    if (h.size() != dimension) raise(ErrorKind::parameter, "covector length differs from dimension");
    forms.push_back(h.as_rationals());
  }

  auto key_of = [](const QMatrix& m) {
    std::string key;
    for (const auto& r : m.rows()) {
      for (const auto& x : r) key += x.to_string() + ",";
      key += ";";
    }
    return key;
  };

  std::vector<Flat> flats;
  std::map<std::string, std::size_t> index_of;
  flats.push_back({QMatrix(dimension), {}, 0, boost::dynamic_bitset<>(n)});
  index_of.emplace(key_of(flats[0].normal_span), 0);

  std::size_t level_begin = 0;
  while (level_begin < flats.size()) {
    const std::size_t level_end = flats.size();
    for (std::size_t f = level_begin; f < level_end; ++f) {
      for (std::size_t h = 0; h < n; ++h) {
        if (flats[f].contained.test(h)) continue;
        QMatrix stacked = flats[f].normal_span;
        stacked.append_row(forms[h]);
        RrefResult reduced = rref(std::move(stacked));
        std::string key = key_of(reduced.matrix);
        if (index_of.contains(key)) continue;
        if (flats.size() >= max_flats)
          raise(ErrorKind::size_limit,
                "intersection lattice exceeds the flat cap of " + std::to_string(max_flats));
        boost::dynamic_bitset<> contained = flats[f].contained;
        for (std::size_t g = 0; g < n; ++g)
          if (!contained.test(g) && in_row_space(reduced, forms[g])) contained.set(g);
        index_of.emplace(std::move(key), flats.size());
        const std::size_t codim = reduced.rank();
        flats.push_back({std::move(reduced.matrix), std::move(reduced.pivots), codim,
                         std::move(contained)});
      }
    }
    level_begin = level_end;
  }

  std::vector<std::pair<std::vector<std::vector<BigInt>>, std::size_t>> order;
  order.reserve(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) order.emplace_back(flats[i].integer_rows(), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const auto ca = flats[a.second].codim;
    const auto cb = flats[b.second].codim;
    if (ca != cb) return ca < cb;
    return a.first < b.first;
  });
  std::vector<Flat> sorted;
  sorted.reserve(flats.size());
  for (auto& [rows, i] : order) sorted.push_back(std::move(flats[i]));

  std::vector<BigInt> mobius(sorted.size(), 0);
  std::vector<std::vector<std::size_t>> parents(sorted.size());
  for (std::size_t x = 0; x < sorted.size(); ++x) {
    if (sorted[x].codim == 0) {
      mobius[x] = 1;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t y = 0; y < x && sorted[y].codim < sorted[x].codim; ++y) {
      if (!sorted[y].contained.is_subset_of(sorted[x].contained)) continue;
      acc += mobius[y];
      if (sorted[y].codim + 1 == sorted[x].codim) parents[x].push_back(y);
    }
    mobius[x] = -acc;
  }

  return IntersectionLattice(dimension, n, std::move(sorted), std::move(mobius),
                             std::move(parents));
}

inline IntersectionLattice build_lattice(const Arrangement& a,
                                         std::size_t max_flats = kDefaultMaxFlats) {
  const auto normals = a.normals();
  return build_lattice(normals, a.k, max_flats);
}

inline IntPolynomial char_poly(const IntersectionLattice& lattice) {
  IntPolynomial chi;
  const std::size_t k = lattice.ambient_dimension();
  for (std::size_t x = 0; x < lattice.size(); ++x)
    chi = chi + IntPolynomial::monomial(k - lattice.flat(x).codim, lattice.mobius(x));
  return chi;
}

inline IntPolynomial poincare_poly(const IntersectionLattice& lattice) {
  IntPolynomial pi;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const std::size_t c = lattice.flat(x).codim;
    BigInt coeff = lattice.mobius(x);
    if (c % 2 == 1) coeff = -coeff;
    pi = pi + IntPolynomial::monomial(c, coeff);
  }
  return pi;
}

struct RegionCount {
  BigInt regions;
  BigInt bounded;  // relatively bounded; zero for any nonempty central arrangement
};

inline RegionCount region_count(const IntersectionLattice& lattice) {
  const IntPolynomial chi = char_poly(lattice);
  BigInt regions = chi.evaluate(-1);
  if (lattice.ambient_dimension() % 2 == 1) regions = -regions;
  return {regions, abs(chi.evaluate(1))};
}

}  // namespace cmarr
