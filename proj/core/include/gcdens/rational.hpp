#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "gcdens/arith.hpp"

namespace gcdens {

// Exact fraction over signed 128-bit integers, always stored reduced with a
// positive denominator. Arithmetic that leaves the 128-bit range throws
// Error(Overflow).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  long double to_long_double() const;
  // "num/den", or just "num" when den = 1.
  std::string to_string() const;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

std::string to_string(i128 value);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace gcdens
