#pragma once

// Independent reference computations used only by the tests. None of these
// call into the code paths they are compared against.

#include "autbound/integer.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace autbound::oracle {

inline Integer ipow(long base, long exp) {
  Integer r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

/// C(n, k) by the multiplicative formula.
inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// N(d, n) from the two boundary closed forms and the two-term recursion,
/// in the shape the recursion is usually stated (no staircase table).
/// `d` is taken in the order given; d[0] plays the role of d_1.
inline Integer n_value(const std::vector<int>& d, int n) {
  const int k = static_cast<int>(d.size());
  if (k == 1) return ipow(d[0] - 1, n + 1);
  if (k == n + 1) {
    Integer p = 1;
    for (int x : d) p *= x;
    return p - 1;
  }
  std::vector<int> tail(d.begin() + 1, d.end());
  return Integer(d[0] - 1) * n_value(d, n - 1) + Integer(d[0]) * n_value(tail, n - 1);
}

/// [t^m] prod_j 1/(1 - a_j t) as the sum over all exponent vectors
/// (e_1..e_r) with sum m of prod a_j^{e_j}.
inline Integer complete_homogeneous(const std::vector<long>& a, int m) {
  std::function<Integer(std::size_t, int)> rec = [&](std::size_t j, int left) -> Integer {
    if (j == a.size()) return left == 0 ? Integer(1) : Integer(0);
    Integer total = 0;
    for (int e = 0; e <= left; ++e) total += ipow(a[j], e) * rec(j + 1, left - e);
    return total;
  };
  return rec(0, m);
}

/// prod_{i=0}^{n} ((-1)^{n-i} + (d-1)^{n-i+1}) (d-1)^i evaluated directly.
inline Integer gl_hypersurface_product(int d, int n) {
  Integer p = 1;
  for (int i = 0; i <= n; ++i) {
    const Integer sign = ((n - i) % 2 == 0) ? 1 : -1;
    p *= (sign + ipow(d - 1, n - i + 1)) * ipow(d - 1, i);
  }
  return p;
}

/// Trial-division primality.
inline bool is_prime_naive(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

}  // namespace autbound::oracle
