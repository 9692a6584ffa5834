#pragma once

// Grid sweeps over (n, d) and over multidegrees. Every sweep has an OpenMP
// path and a serial reference path; both return results in the same fixed
// order, so callers can compare them element by element.

#include "autbound/bounds.hpp"
#include "autbound/discriminant.hpp"

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace autbound {

enum class Execution { Serial, Parallel };

/// Inclusive integer range; empty when first > last.
struct IntRange {
  int first = 0;
  int last = -1;

  bool empty() const { return first > last; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(last - first + 1); }
};

/// Calls body(i) for i in [0, count). With Execution::Parallel the calls are
/// distributed over OpenMP threads. If any call throws, the exception of the
/// lowest failing index is rethrown after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec);

template <typename Fn>
auto map_indices(std::size_t count, Fn&& fn, Execution exec) {
  using T = decltype(fn(std::size_t{0}));
  std::vector<std::optional<T>> slots(count);
  for_each_index(count, [&](std::size_t i) { slots[i].emplace(fn(i)); }, exec);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Bounds of one kind (GlVector, Pgl or Deck) for every (n, d) cell,
/// ordered by d, then n.
std::vector<BoundReport> bound_grid(BoundKind kind, IntRange n, IntRange d, Execution exec);

enum class CellStatus { Pass, Fail, NoReference };

struct CellCheck {
  int n = 0;
  int d = 0;
  BoundReport computed;
  const ReferenceEntry* reference = nullptr;
  CellStatus status = CellStatus::NoReference;
};

/// Recomputes the PGL bound on the grid and compares value and
/// factorization against the tabulated reference where one exists.
std::vector<CellCheck> check_table(IntRange n, IntRange d, Execution exec);

struct NAgreementRow {
  Multidegree degrees;
  int n = 0;
  Integer recursion;
  Integer closed;
  Integer oracle;

  bool agrees() const { return recursion == closed && closed == oracle; }
};

/// Every sorted multidegree with entries in 2..max_entry and k <= max_k,
/// and every n with k <= n + 1 <= max_n_plus_1.
std::vector<std::pair<Multidegree, int>> multidegree_grid(int max_entry, int max_k, int max_n_plus_1);

/// N by all three methods over multidegree_grid(...).
std::vector<NAgreementRow> n_agreement_grid(int max_entry, int max_k, int max_n_plus_1, Execution exec);

}  // namespace autbound
