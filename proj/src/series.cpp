#include "autbound/series.hpp"

#include <algorithm>
#include <utility>

namespace autbound {

IntSeries::IntSeries(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("IntSeries: at least one coefficient is required");
}

IntSeries IntSeries::constant(const Integer& c, std::size_t order) {
  std::vector<Integer> coeffs(order + 1, Integer(0));
  coeffs[0] = c;
  return IntSeries(std::move(coeffs));
}

IntSeries IntSeries::linear(const Integer& c0, const Integer& c1, std::size_t order) {
  std::vector<Integer> coeffs(order + 1, Integer(0));
  coeffs[0] = c0;
  if (order >= 1) coeffs[1] = c1;
  return IntSeries(std::move(coeffs));
}

const Integer& IntSeries::coefficient(std::size_t m) const {
  if (m > order()) {
    throw DomainError("coefficient: t^" + std::to_string(m) + " exceeds truncation order " +
                      std::to_string(order()));
  }
  return coeffs_[m];
}

IntSeries IntSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw DomainError("truncated: cannot extend a truncated series");
  return IntSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

IntSeries IntSeries::inverse() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) {
    throw DomainError("invert: constant term " + autbound::to_string(c0) + " is not a unit");
  }
  // c0 is its own inverse over the integers.
  std::vector<Integer> inv(coeffs_.size());
  inv[0] = c0;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= j; ++i) acc += coeffs_[i] * inv[j - i];
    inv[j] = -c0 * acc;
  }
  return IntSeries(std::move(inv));
}

IntSeries IntSeries::pow(unsigned exponent) const {
  IntSeries result = constant(1, order());
  for (unsigned e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

std::string IntSeries::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j > 0) out += " + ";
    out += "(" + autbound::to_string(coeffs_[j]) + ")";
    if (j == 1) out += "t";
    if (j > 1) out += "t^" + std::to_string(j);
  }
  return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

IntSeries operator*(const IntSeries& f, const IntSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Integer> out(order + 1, Integer(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return IntSeries(std::move(out));
}

IntSeries operator+(const IntSeries& f, const IntSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = f.coeffs_[i] + g.coeffs_[i];
  return IntSeries(std::move(out));
}

IntSeries operator-(const IntSeries& f, const IntSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = f.coeffs_[i] - g.coeffs_[i];
  return IntSeries(std::move(out));
}

Integer rational_product_coefficient(std::span<const Integer> a, std::size_t m) {
  IntSeries product = IntSeries::constant(1, m);
  for (const Integer& aj : a) product = product * IntSeries::linear(1, -aj, m).inverse();
  return product.coefficient(m);
}

}  // namespace autbound
