#include "autbound/strata.hpp"

#include "autbound/series.hpp"

#include <string>

namespace autbound {

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("IntMatrix: size mismatch");
  const std::size_t s = a.size_;
  IntMatrix out(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t l = 0; l < s; ++l) {
      const Integer& ail = a.at(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < s; ++j) out.at(i, j) += ail * b.at(l, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::pow(unsigned exponent) const {
  IntMatrix result = identity(size_);
  for (unsigned e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != size_) throw DomainError("IntMatrix: vector size mismatch");
  std::vector<Integer> out(size_, Integer(0));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

ChernVector chern_coeffs(int d, int n, int m) {
  if (d < 2) throw DomainError("chern_coeffs: d must be >= 2");
  if (m < 0 || n < 0) throw DomainError("chern_coeffs: n and m must be non-negative");
  if (m > n) {
    throw DomainError("chern_coeffs: CP^" + std::to_string(m) + " does not fit inside CP^" + std::to_string(n));
  }
  const auto order = static_cast<std::size_t>(m);
  const IntSeries total = IntSeries::linear(1, d - 1, order).pow(static_cast<unsigned>(n + 1)).inverse();
  ChernVector cv{m, {}};
  for (std::size_t j = 1; j <= order; ++j) cv.coeffs.push_back(total.coefficient(j));
  return cv;
}

IntMatrix companion_matrix(const ChernVector& cv) {
  const auto m = static_cast<std::size_t>(cv.base_dim);
  if (cv.coeffs.size() != m) throw DomainError("ChernVector: coefficient count differs from base dimension");
  IntMatrix a(m);
  for (std::size_t row = 1; row < m; ++row) a.at(row, row - 1) = 1;
  // Row r of the last column holds -x_{m-r}.
  for (std::size_t row = 0; row < m; ++row) a.at(row, m - 1) = -cv.coeffs[m - 1 - row];
  return a;
}

Integer swept_degree(const ChernVector& cv) {
  if (cv.base_dim == 0) return 1;
  const IntMatrix a = companion_matrix(cv);
  const auto m = static_cast<std::size_t>(cv.base_dim);
  std::vector<Integer> v(m, Integer(0));
  v[m - 1] = 1;
  for (std::size_t step = 0; step < m; ++step) v = a.apply(v);
  return v[m - 1];
}

Integer stratum_degree(int d, int n, int m) { return swept_degree(chern_coeffs(d, n, m)); }

Integer sigma_degree(int d, int n) {
  if (n < 1) throw DomainError("sigma_degree: n must be >= 1");
  return stratum_degree(d, n, n);
}

}  // namespace autbound
