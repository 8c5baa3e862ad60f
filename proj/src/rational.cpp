#include "rescone/rational.hpp"

#include <limits>
#include <ostream>

#include "rescone/error.hpp"

namespace rescone {
namespace {

bool valid_integer_token(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::parse_error, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

bool Rational::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return is_integer() && value_.get_num() >= lo && value_.get_num() <= hi;
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw Error(Errc::dimension_mismatch, "rational " + str() + " is not a 64-bit integer");
  return std::stoll(value_.get_num().get_str());
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(Errc::degenerate_configuration, "zero raised to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::degenerate_configuration, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rescone
