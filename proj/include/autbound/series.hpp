#pragma once

#include "autbound/integer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace autbound {

/// Truncated power series c_0 + c_1 t + ... + c_T t^T with exact integer
/// coefficients. The truncation order T is part of the value: binary
/// operations truncate to the smaller order of their operands.
class IntSeries {
 public:
  /// Series with the given coefficients; T = coefficients.size() - 1.
  /// Throws DomainError on an empty coefficient list.
  explicit IntSeries(std::vector<Integer> coefficients);

  static IntSeries constant(const Integer& c, std::size_t order);
  /// c0 + c1 t, truncated at `order`.
  static IntSeries linear(const Integer& c0, const Integer& c1, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Integer> coefficients() const { return coeffs_; }

  /// [t^m]; throws DomainError when m exceeds the truncation order.
  const Integer& coefficient(std::size_t m) const;

  IntSeries truncated(std::size_t order) const;

  /// Multiplicative inverse; the constant term must be +1 or -1.
  IntSeries inverse() const;

  IntSeries pow(unsigned exponent) const;

  std::string to_string() const;

  friend IntSeries operator*(const IntSeries& f, const IntSeries& g);
  friend IntSeries operator+(const IntSeries& f, const IntSeries& g);
  friend IntSeries operator-(const IntSeries& f, const IntSeries& g);
  friend bool operator==(const IntSeries& f, const IntSeries& g) = default;

 private:
  std::vector<Integer> coeffs_;
};

inline IntSeries multiply(const IntSeries& f, const IntSeries& g) { return f * g; }
inline IntSeries invert(const IntSeries& f) { return f.inverse(); }
inline const Integer& coefficient(const IntSeries& f, std::size_t m) { return f.coefficient(m); }

/// [t^m] of prod_j 1 / (1 - a_j t). The empty product is 1.
Integer rational_product_coefficient(std::span<const Integer> a, std::size_t m);

}  // namespace autbound
