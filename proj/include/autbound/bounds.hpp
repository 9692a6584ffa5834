#pragma once

// Divisibility bounds for stabilisers and automorphism groups of smooth
// hypersurfaces and complete intersections, plus the deck-transformation
// analogue for ramified self-coverings of CP^n.

#include "autbound/discriminant.hpp"
#include "autbound/factorization.hpp"
#include "autbound/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace autbound {

enum class BoundKind {
  GlVector,   // GL_{n+1} stabiliser of a single hypersurface equation
  GlGeneral,  // GL_{n+1} stabiliser of a complete-intersection tuple
  Pgl,        // PGL_{n+1} stabiliser of a smooth hypersurface
  Deck,       // deck group of a ramified covering CP^n -> CP^n
};

std::string to_string(BoundKind kind);

/// A computed bound. `factors` holds the per-index terms exactly as they
/// enter the final product (prefactors such as 1/(n+1) included), so that
/// their product is `value`.
struct BoundReport {
  BoundKind kind = BoundKind::GlVector;
  int n = 0;
  std::vector<int> degrees;
  Integer value;
  Factorization factorization;
  std::vector<Rational> factors;
};

/// prod_{i=0}^{n} ((-1)^{n-i} + (d-1)^{n-i+1}) (d-1)^i. Requires d >= 3, n >= 0.
BoundReport gl_bound_hypersurface(int d, int n);

/// (d_1...d_k)^{n+1} when k = n + 1, otherwise the product of the
/// multipliers m_1..m_{n+1}. Requires md != (2), k <= n + 1.
BoundReport gl_bound_general(const Multidegree& md, int n);

/// 1/(n+1) prod_{i=0}^{n-1} ((-1)^{n-i} + (d-1)^{n-i+1})
///   LCM(C(n+1,i)(d-1)^i, (n+1)(d-1)^n) / C(n+1,i),
/// evaluated in exact rationals. Requires d >= 3, n >= 1.
BoundReport pgl_bound(int d, int n);

/// The expanded polynomial forms of pgl_bound for n = 2, 3, 4.
Integer pgl_bound_closed(int n, int d);

/// d^{n^2-1} prod_{i=2}^{n+1} LCM(C(n+1,i), (n+1) d^{i-1}) / C(n+1,i).
/// The covering has degree d^n. Requires d >= 2, n >= 1.
BoundReport deck_bound(int d, int n);

struct ReferenceEntry {
  int n = 0;
  int d = 0;
  Integer value;
  Factorization factorization;
  /// The decimal value, for the cells that print one next to the factorization.
  std::optional<Integer> printed_value;
};

/// Published values of the PGL bound for n in {2,3,4} and d in 3..10,
/// ordered by d then n.
const std::vector<ReferenceEntry>& reference_table();

/// Lookup into reference_table(); nullptr if (n, d) is not tabulated.
const ReferenceEntry* find_reference(int n, int d);

}  // namespace autbound
