#include "gcdens/rational.hpp"

#include <algorithm>

#include "gcdens/error.hpp"

namespace gcdens {

namespace {

u128 magnitude(i128 v) { return v < 0 ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("rational ") + op + " exceeds 128 bits");
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiply");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

}  // namespace

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = static_cast<i128>(gcd128(magnitude(num), magnitude(den)));
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  // Cross-multiply over the reduced common denominator.
  i128 g = static_cast<i128>(gcd128(static_cast<u128>(a.den_), static_cast<u128>(b.den_)));
  i128 da = a.den_ / g, db = b.den_ / g;
  i128 num = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
  return Rational(num, checked_mul(a.den_, db));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  i128 g1 = static_cast<i128>(gcd128(magnitude(a.num_), static_cast<u128>(b.den_)));
  i128 g2 = static_cast<i128>(gcd128(magnitude(b.num_), static_cast<u128>(a.den_)));
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidInput, "division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = checked_mul(a.num_, b.den_);
  i128 rhs = checked_mul(b.num_, a.den_);
  return lhs <=> rhs;
}

long double Rational::to_long_double() const {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string to_string(i128 value) {
  if (value == 0) return "0";
  u128 m = magnitude(value);
  std::string digits;
  while (m != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (value < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::to_string() const {
  if (den_ == 1) return gcdens::to_string(num_);
  return gcdens::to_string(num_) + "/" + gcdens::to_string(den_);
}

}  // namespace gcdens
