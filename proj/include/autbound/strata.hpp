#pragma once

// Degrees of varieties swept by linear subspaces, computed from Chern
// classes through powers of a companion-style matrix.

#include "autbound/integer.hpp"

#include <cstddef>
#include <vector>

namespace autbound {

/// The t^1..t^m coefficients x_1..x_m of a total Chern class series over a
/// base whose cohomology is generated by one class in degree 2 (e.g. CP^m).
struct ChernVector {
  int base_dim = 0;
  std::vector<Integer> coeffs;  // size == base_dim
};

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t size) : size_(size), cells_(size * size, Integer(0)) {}

  static IntMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  Integer& at(std::size_t row, std::size_t col) { return cells_[row * size_ + col]; }
  const Integer& at(std::size_t row, std::size_t col) const { return cells_[row * size_ + col]; }

  IntMatrix pow(unsigned exponent) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<Integer> cells_;
};

/// Chern coefficients of the singularity bundle over CP^m inside CP^n:
/// the t^1..t^m coefficients of (1 + (d-1)t)^{-(n+1)}.
/// Requires d >= 2 and 0 <= m <= n.
ChernVector chern_coeffs(int d, int n, int m);

/// Companion-style matrix of a Chern vector: ones on the sub-diagonal and
/// last column (-x_m, ..., -x_1) read top to bottom.
IntMatrix companion_matrix(const ChernVector& cv);

/// Last coordinate of A^m v with v = (0, ..., 0, 1)^T, i.e. the bottom-right
/// entry of A^m. A point base (m = 0) sweeps degree 1.
Integer swept_degree(const ChernVector& cv);

/// Degree of the stratum of degree-d hypersurfaces in CP^n singular
/// somewhere on a fixed CP^m. Equals C(n+1, m) (d-1)^m.
Integer stratum_degree(int d, int n, int m);

/// Degree of the discriminant of degree-d hypersurfaces in CP^n,
/// (n+1)(d-1)^n. Requires n >= 1.
Integer sigma_degree(int d, int n);

}  // namespace autbound
