#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational and Gaussian-rational scalars.
 *
 * Rational keeps the usual normal form: the denominator is positive, the
 * fraction is fully reduced, and zero is 0/1. Every arithmetic result is
 * normalized before it is returned, so structural equality is value equality.
 *
 * Text form is "p/q", with "/q" omitted when q = 1.
 */

#include <cctype>
#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmarr/error.hpp"

namespace cmarr {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) raise(ErrorKind::division_by_zero, "rational with zero denominator");
    normalize();
  }

  /// Parses "p", "-p", "p/q" or "-p/q" (decimal digits, q > 0).
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      raise(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    auto digits_ok = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      return true;
    };
    std::string_view num_digits = num_text;
    bool negative = false;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      negative = num_digits.front() == '-';
      num_digits.remove_prefix(1);
    }
    if (!digits_ok(num_digits)) return fail();
    BigInt num{std::string(num_digits)};
    if (negative) num = -num;
    if (slash == std::string_view::npos) return Rational(std::move(num));
    if (!digits_ok(den_text)) return fail();
    BigInt den{std::string(den_text)};
    if (den == 0) raise(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) raise(ErrorKind::division_by_zero, "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_{0};
  BigInt den_{1};
};

/// A point of the complex plane with rational coordinates. Ordered
/// lexicographically by (re, im); that order is only a canonical tie-break and
/// carries no geometric meaning.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussianRational(T r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  /// |re| + |im|, a rational upper bound for the Euclidean norm.
  Rational l1_norm() const { return re.abs() + im.abs(); }

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& z) {
    return {s * z.re, s * z.im};
  }
  friend GaussianRational operator/(const GaussianRational& z, const Rational& s) {
    return {z.re / s, z.im / s};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
  friend std::strong_ordering operator<=>(const GaussianRational& a,
                                          const GaussianRational& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }

  /// "a", "bi" or "a+bi" style, for messages and test diagnostics.
  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string imag = (im == Rational(1))    ? "i"
                       : (im == Rational(-1)) ? "-i"
                                              : im.to_string() + "i";
    if (re.is_zero()) return imag;
    if (imag.front() == '-') return re.to_string() + imag;
    return re.to_string() + "+" + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }
};

}  // namespace cmarr
