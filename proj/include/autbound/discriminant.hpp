#pragma once

// Intersection numbers N(d, n) of complete-intersection discriminants and
// the multipliers m_i built from them.
//
// N is computed three ways:
//   * n_value                    -- two-term recursion on a staircase table
//   * n_value_closed             -- sum of generating-function coefficients
//   * n_value_staircase_oracle   -- explicit enumeration of weighted paths
// and the three must agree.

#include "autbound/integer.hpp"

#include <span>
#include <string>
#include <vector>

namespace autbound {

/// Non-decreasing list d_1 <= ... <= d_k of degrees, each >= 2, k >= 1.
/// Input order does not matter; the list is sorted on construction.
class Multidegree {
 public:
  explicit Multidegree(std::vector<int> degrees);
  Multidegree(std::initializer_list<int> degrees) : Multidegree(std::vector<int>(degrees)) {}

  /// Parses "3" or "2,3,3".
  static Multidegree parse(const std::string& text);

  int k() const { return static_cast<int>(degrees_.size()); }
  std::span<const int> degrees() const { return degrees_; }
  int front() const { return degrees_.front(); }

  /// The multidegree with d_1 removed. Requires k >= 2.
  Multidegree tail() const;

  /// True for the excluded case d = (2).
  bool is_single_quadric() const { return degrees_.size() == 1 && degrees_[0] == 2; }

  /// "2,3,3"
  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<int> degrees_;
};

/// The ladder table: column a = 1..k holds the multidegree
/// (d_{k-a+1}, ..., d_k), row b = -2..top holds N of that multidegree in
/// dimension a + b, with a row of 1's at b = -2.
///
///   entry(a, -2) = 1
///   entry(0, b)  = 0
///   entry(a, b)  = (w - 1) * entry(a, b - 1) + w * entry(a - 1, b),  w = d_{k-a+1}
///
/// Built from the raw list without sorting, so the recursion's "d_1" is the
/// first listed entry.
class StaircaseTable {
 public:
  /// Table for `degrees` (each >= 2) up to row `top_row` (>= -2).
  StaircaseTable(std::span<const int> degrees, int top_row);

  int columns() const { return k_; }
  int top_row() const { return top_; }

  /// Entry at column a in [0, k], row b in [-2, top_row].
  const Integer& entry(int a, int b) const;

  /// N(degrees, n) = entry(k, n - k). Requires k <= n + 1 and n - k <= top_row().
  const Integer& n_value(int n) const;

 private:
  int k_;
  int top_;
  std::vector<Integer> cells_;  // (k + 1) x (top + 3), column-major
};

/// N(md, n) via the staircase recursion. Requires 1 <= k <= n + 1.
Integer n_value(const Multidegree& md, int n);

/// Same recursion on an unsorted list; used to exercise symmetry.
Integer n_value_unsorted(std::span<const int> degrees, int n);

/// N(md, n) via the ladders closed form:
///   (d_1 - 1)^{n-k+2} + sum_{i=2}^{k} d_1...d_{i-1} (d_i - 1) [t^{n-k+1}] prod_{j<=i} 1/(1 - (d_j - 1)t)
Integer n_value_closed(const Multidegree& md, int n);

/// N(md, n) by enumerating every weighted staircase from the top box down to
/// the row of 1's. Exponential; restricted to k + n <= 24.
Integer n_value_staircase_oracle(const Multidegree& md, int n);

inline constexpr int kStaircaseBudget = 24;

/// Multiplier m_i^{d,n}:
///   N(d,n) + (-1)^{n-k+1}          if i >= n - k + 2
///   N(d,n) + (-1)^{i+1} N(d,n-i)   if i <= n - k + 1
/// Requires 1 <= i <= n + 1, k <= n + 1 and md != (2).
Integer multiplier(const Multidegree& md, int n, int i);

/// All multipliers m_1..m_{n+1}.
std::vector<Integer> multipliers(const Multidegree& md, int n);

/// Checks m_i(d, n) = gamma * m_i(d', n-1) + delta * m_i(d, n-1) with
/// gamma = d_1 (0 if k = 1), delta = d_1 - 1 (0 if k = n + 1), d' = d minus d_1.
/// Requires n >= 1 and 1 <= i <= n.
bool multiplier_suspension_check(const Multidegree& md, int n, int i);

}  // namespace autbound
