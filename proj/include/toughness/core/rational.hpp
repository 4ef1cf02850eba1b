#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tough {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative exact fraction, always stored in lowest terms (0 is 0/1).
///
/// Toughness values, thresholds and separations are all carried as Rational;
/// there is no floating point anywhere on the toughness path.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  /// Accepts "a/b" or "a" (decimal, non-negative). Unreduced input is reduced.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  /// Always "a/b", including integers ("2/1") and zero ("0/1").
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  /// Throws DomainError when the result would be negative.
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// |x - y| without leaving the non-negative domain.
Rational abs_diff(const Rational& x, const Rational& y);

}  // namespace tough
