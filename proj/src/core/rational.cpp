#include "toughness/core/rational.hpp"

#include "toughness/core/errors.hpp"

#include <cctype>
#include <utility>

namespace tough {
namespace {

BigInt parse_natural(std::string_view digits, std::size_t base_offset) {
  if (digits.empty()) throw ParseError("expected digits", base_offset);
  BigInt value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in rational", base_offset + i);
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value < 0) throw DomainError("Rational: negative value " + std::to_string(value));
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("Rational: zero denominator");
  if (num_ < 0 || den_ < 0) {
    if (num_ < 0 && den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    } else if (num_ != 0) {
      throw DomainError("Rational: negative value");
    } else {
      den_ = 1;
    }
  }
  normalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, 0), BigInt(1));
  BigInt num = parse_natural(text.substr(0, slash), 0);
  BigInt den = parse_natural(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(std::move(num), std::move(den));
}

void Rational::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  BigInt num = x.num_ * y.den_ - y.num_ * x.den_;
  if (num < 0) throw DomainError("Rational: subtraction would go negative");
  return Rational(std::move(num), x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DomainError("Rational: division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const BigInt lhs = x.num_ * y.den_;
  const BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs_diff(const Rational& x, const Rational& y) { return x < y ? y - x : x - y; }

}  // namespace tough
