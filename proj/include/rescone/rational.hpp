#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rescone {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts an optionally signed integer or "p/q" with a positive
  /// denominator; surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  /// "p/q", or just "p" when the denominator is one.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// Integer value; only meaningful when is_integer() and it fits.
  std::int64_t to_int64() const;
  bool fits_int64() const;

  Rational pow(int exponent) const;
  Rational abs() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rescone
