#pragma once

/**
 * @file finite_field.hpp
 * @brief Characteristic polynomial by counting points over prime fields.
 *
 * For a central arrangement with integer forms and a large enough prime q,
 * the number of points of F_q^k off every hyperplane equals chi(q). Counting
 * at k+1 primes and interpolating recovers chi without touching the lattice.
 *
 * The count is exhaustive, with two exact shortcuts:
 *  - when every form vanishes on (1,...,1) the count is q times the count on
 *    the slice x_1 = 0;
 *  - the last free coordinate is never enumerated; each form ending there
 *    forbids exactly one value, so the survivors are q minus the distinct
 *    forbidden values.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmarr/arrangement.hpp"
#include "cmarr/error.hpp"
#include "cmarr/linalg.hpp"
#include "cmarr/polynomial.hpp"
#include "cmarr/rational.hpp"

namespace cmarr {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

/// k+1 consecutive primes starting at the first prime >= max(11, hyperplanes+1).
inline std::vector<std::uint64_t> select_primes(std::size_t hyperplanes, std::size_t k,
                                                std::uint64_t at_least = 0) {
  std::uint64_t p = std::max<std::uint64_t>({11, hyperplanes + 1, at_least});
  std::vector<std::uint64_t> primes;
  for (std::size_t i = 0; i <= k; ++i) {
    p = next_prime_at_least(p);
    primes.push_back(p);
    ++p;
  }
  return primes;
}

namespace detail {

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

struct FieldCounter {
  std::uint64_t p;
  std::size_t k;
  std::vector<std::vector<std::uint64_t>> forms;          // coefficients mod p
  std::vector<std::vector<std::size_t>> ending_at;        // forms by last nonzero index
  std::vector<std::uint64_t> x;
  std::vector<char> forbidden;
  bool first_fixed = false;

  std::uint64_t partial(const std::vector<std::uint64_t>& f, std::size_t upto) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < upto; ++i) v = (v + f[i] * x[i]) % p;
    return v;
  }

  std::uint64_t count_from(std::size_t j) {
    if (j == k) return 1;
    const bool fixed = (j == 0 && first_fixed);
    if (j + 1 == k && !fixed) {
      std::fill(forbidden.begin(), forbidden.end(), 0);
      std::uint64_t distinct = 0;
      for (auto fi : ending_at[j]) {
        const auto& f = forms[fi];
        const std::uint64_t rest = partial(f, j);
        const std::uint64_t v = (p - rest) % p * inverse_mod(f[j], p) % p;
        if (!forbidden[v]) {
          forbidden[v] = 1;
          ++distinct;
        }
      }
      return p - distinct;
    }
    std::uint64_t total = 0;
    const std::uint64_t values = fixed ? 1 : p;
    for (std::uint64_t v = 0; v < values; ++v) {
      x[j] = v;
      bool ok = true;
      for (auto fi : ending_at[j])
        if (partial(forms[fi], j + 1) == 0) {
          ok = false;
          break;
        }
      if (ok) total += count_from(j + 1);
    }
    return total;
  }
};

}  // namespace detail

/// #{x in F_p^k : no form vanishes at x}, by exhaustive enumeration.
inline std::uint64_t count_complement_points(std::span<const IntCovector> normals,
                                             std::size_t k, std::uint64_t p) {
  if (!is_prime(p)) raise(ErrorKind::parameter, std::to_string(p) + " is not prime");
  detail::FieldCounter counter{p, k, {}, std::vector<std::vector<std::size_t>>(k), {}, {}, false};
  bool all_sum_zero = k > 0;
  const BigInt modulus(p);
  for (const auto& h : normals) {
    if (h.size() != k) raise(ErrorKind::parameter, "covector length differs from dimension");
    std::vector<std::uint64_t> f(k);
    std::size_t last = k;
    for (std::size_t i = 0; i < k; ++i) {
      BigInt r = h[i] % modulus;
      if (r < 0) r += modulus;
      f[i] = r.convert_to<std::uint64_t>();
      if (f[i] != 0) last = i;
    }
    if (last == k) return 0;  // form vanishes identically mod p
    if (h.coefficient_sum() != 0) all_sum_zero = false;
    counter.ending_at[last].push_back(counter.forms.size());
    counter.forms.push_back(std::move(f));
  }
  counter.x.assign(k, 0);
  counter.forbidden.assign(p, 0);
  counter.first_fixed = all_sum_zero;
  const std::uint64_t c = counter.count_from(0);
  return all_sum_zero ? c * p : c;
}

/// Unique polynomial of degree < points.size() through (x_i, y_i), by Newton
/// divided differences. Throws ErrorKind::bad_prime if a coefficient is not an
/// integer.
inline IntPolynomial interpolate_integer(std::span<const std::uint64_t> xs,
                                         std::span<const std::uint64_t> ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(BigInt(xs[i]) - BigInt(xs[i - level]));

  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeff(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // coeff <- coeff * (q - x_i) + dd[i]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t d = 0; d + 1 < n; ++d) next[d + 1] += coeff[d];
    for (std::size_t d = 0; d < n; ++d) next[d] -= coeff[d] * Rational(BigInt(xs[i]));
    next[0] += dd[i];
    coeff = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(n);
  for (const auto& c : coeff) {
    if (!c.is_integer())
      raise(ErrorKind::bad_prime, "interpolated coefficient " + c.to_string() + " is not an integer");
    out.push_back(c.numerator());
  }
  return IntPolynomial(std::move(out));
}

inline IntPolynomial finite_field_charpoly(std::span<const IntCovector> normals, std::size_t k,
                                           std::span<const std::uint64_t> primes) {
  if (primes.size() < k + 1)
    raise(ErrorKind::parameter, "need at least k+1 primes to interpolate a degree-k polynomial");
  std::vector<std::uint64_t> counts;
  counts.reserve(primes.size());
  for (auto p : primes) counts.push_back(count_complement_points(normals, k, p));
  return interpolate_integer(primes, counts);
}

/// Chooses primes per select_primes and moves to larger primes after a
/// bad-prime failure, up to `attempts` times.
inline IntPolynomial finite_field_charpoly(const Arrangement& a, int attempts = 3) {
  const auto normals = a.normals();
  std::uint64_t start = 0;
  for (int i = 0;; ++i) {
    const auto primes = select_primes(a.size(), a.k, start);
    try {
      return finite_field_charpoly(normals, a.k, primes);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::bad_prime || i + 1 >= attempts) throw;
      start = primes.back() + 1;
    }
  }
}

}  // namespace cmarr
