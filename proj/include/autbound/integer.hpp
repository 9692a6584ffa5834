#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// lowest terms with a positive denominator at all times.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace autbound {

using Integer = mpz_class;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal identity that must hold is found broken
/// (e.g. a bound that should be integral is not). Never expected.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Positive least common multiple. Throws DomainError if either is zero.
Integer lcm(const Integer& a, const Integer& b);

/// Non-negative greatest common divisor; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// base^exp for exp >= 0.
Integer pow(const Integer& base, unsigned long exp);

/// (-1)^e as an Integer.
inline Integer sign_power(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

std::string to_string(const Integer& v);

/// Parses a decimal string. Throws DomainError on malformed input.
Integer parse_integer(const std::string& text);

class Rational {
 public:
  Rational() = default;
  Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
  Rational(long value) : Rational(Integer(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  const Integer& numerator() const;
  const Integer& denominator() const;
  bool is_integer() const { return denominator() == 1; }

  /// Returns the value as an Integer, or throws InvariantViolation naming
  /// `what` if the denominator is not 1.
  Integer to_integer(const std::string& what) const;

  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace autbound
