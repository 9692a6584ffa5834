#pragma once

#include "autbound/integer.hpp"

#include <span>
#include <string>
#include <vector>

namespace autbound {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

enum class FactorStyle {
  Text,     // 2^4 · 3^3
  Compact,  // 2^4·3^3
  Latex,    // 2^4\cdot 3^3, 2^{10}
};

/// Prime factorization of a positive integer. The empty factorization is 1.
///
/// Primes are strictly increasing and every exponent is positive; the
/// constructor rejects anything else, including composite "primes".
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Product of prime^exponent.
  Integer value() const;

  std::string to_string(FactorStyle style = FactorStyle::Text) const;

  friend bool operator==(const Factorization& a, const Factorization& b) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Primality check: deterministic Miller-Rabin below 3.3e24, strong probable
/// prime to the same witnesses plus a BPSW test above that.
bool is_prime(const Integer& v);

/// Complete factorization of v >= 2 (throws DomainError otherwise).
/// Trial division below 10^6, then Pollard-rho (Brent) on the cofactor.
Factorization factorize(const Integer& v);

/// Factorization of the product of `factors`, obtained by factoring each
/// numerator and denominator separately and merging exponents. Throws
/// InvariantViolation if the product is not a positive integer.
Factorization factorize_product(std::span<const Rational> factors);

}  // namespace autbound
