#pragma once

/**
 * @file linalg.hpp
 * @brief Integer covectors and exact row reduction over the rationals.
 */

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmarr/error.hpp"
#include "cmarr/rational.hpp"

namespace cmarr {

/// Nonzero integer linear form in canonical projective normal form: the gcd of
/// the coefficients is 1 and the first nonzero coefficient is positive.
class IntCovector {
 public:
  IntCovector() = default;

  /// Canonical representative of the line spanned by `v`. Throws
  /// ErrorKind::degenerate_form when `v` is identically zero.
  static IntCovector canonicalize(std::span<const BigInt> v) {
    BigInt g = 0;
    int lead_sign = 0;
    for (const auto& c : v) {
      if (c == 0) continue;
      if (lead_sign == 0) lead_sign = c < 0 ? -1 : 1;
      g = gcd(g, c);
    }
    if (lead_sign == 0) raise(ErrorKind::degenerate_form, "zero covector has no hyperplane");
    IntCovector out;
    out.coefficients_.reserve(v.size());
    for (const auto& c : v) out.coefficients_.push_back(c / g * lead_sign);
    return out;
  }

  static IntCovector canonicalize(std::span<const long long> v) {
    std::vector<BigInt> big(v.begin(), v.end());
    return canonicalize(std::span<const BigInt>(big));
  }

  static IntCovector canonicalize(std::initializer_list<long long> v) {
    std::vector<BigInt> big(v.begin(), v.end());
    return canonicalize(std::span<const BigInt>(big));
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& c : coefficients_) s += c;
    return s;
  }

  std::vector<Rational> as_rationals() const {
    return {coefficients_.begin(), coefficients_.end()};
  }

  friend bool operator==(const IntCovector&, const IntCovector&) = default;
  friend bool operator<(const IntCovector& a, const IntCovector& b) {
    return a.coefficients_ < b.coefficients_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      if (i) s += ",";
      s += coefficients_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<BigInt> coefficients_;
};

inline IntCovector canonicalize_covector(std::span<const BigInt> v) {
  return IntCovector::canonicalize(v);
}

/// Dense rectangular matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;

  explicit QMatrix(std::size_t cols) : cols_(cols) {}

  QMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, std::vector<Rational>(cols)) {}

  QMatrix(std::vector<std::vector<Rational>> rows, std::size_t cols)
      : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != cols_) raise(ErrorKind::parameter, "ragged matrix rows");
  }

  static QMatrix from_rows(std::vector<std::vector<Rational>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return QMatrix(std::move(rows), cols);
  }

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_; }

  const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  void append_row(std::vector<Rational> r) {
    if (r.size() != cols_) raise(ErrorKind::parameter, "row length does not match matrix");
    rows_.push_back(std::move(r));
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

struct RrefResult {
  QMatrix matrix;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form. Zero rows are dropped, so the result is the
/// unique canonical basis of the row space.
inline RrefResult rref(QMatrix m) {
  const std::size_t rows = m.row_count();
  const std::size_t cols = m.col_count();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.swap_rows(p, r);
    const Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> kept(m.rows().begin(), m.rows().begin() + r);
  return {QMatrix(std::move(kept), cols), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

/// True when `v` lies in the row space of the reduced matrix `basis`.
inline bool in_row_space(const RrefResult& basis, std::span<const Rational> v) {
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const std::size_t c = basis.pivots[i];
    if (w[c].is_zero()) continue;
    const Rational f = w[c];
    const auto& row = basis.matrix.row(i);
    for (std::size_t j = c; j < w.size(); ++j) w[j] -= f * row[j];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

/// Smallest integer multiple of `v` with coprime entries, keeping the sign of
/// the first nonzero entry. The zero vector maps to zeros.
inline std::vector<BigInt> primitive_integer_row(std::span<const Rational> v) {
  BigInt lcm = 1;
  for (const auto& x : v) lcm = lcm / gcd(lcm, x.denominator()) * x.denominator();
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(x.numerator() * (lcm / x.denominator()));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace cmarr
