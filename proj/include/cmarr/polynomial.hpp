#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cmarr/rational.hpp"

namespace cmarr {

/// Dense integer polynomial, coefficient i belongs to q^i. Trailing zeros are
/// trimmed so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coefficients)
      : c_(coefficients.begin(), coefficients.end()) {
    trim();
  }

  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1) {
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = std::move(coefficient);
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree of the polynomial; 0 for constants including zero.
  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  BigInt evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt mag = abs(c_[i]);
      if (s.empty()) {
        if (c_[i] < 0) s += "-";
      } else {
        s += c_[i] < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) s += mag.str();
      if (i >= 1) s += "q";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

}  // namespace cmarr
