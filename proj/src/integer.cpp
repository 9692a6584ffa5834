#include "autbound/integer.hpp"

#include <utility>

namespace autbound {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw DomainError("lcm: undefined for a zero argument");
  Integer result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw DomainError("not an integer: '" + text + "'");
  }
  Integer v;
  v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return v;
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

const Integer& Rational::numerator() const { return value_.get_num(); }
const Integer& Rational::denominator() const { return value_.get_den(); }

Integer Rational::to_integer(const std::string& what) const {
  if (!is_integer()) {
    throw InvariantViolation(what + ": expected an integer, got " + to_string());
  }
  return numerator();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str(10);
  return numerator().get_str(10) + "/" + denominator().get_str(10);
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw DomainError("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }

}  // namespace autbound
