#include "autbound/sweep.hpp"

namespace autbound {

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec) {
  std::vector<std::exception_ptr> errors(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<BoundReport> bound_grid(BoundKind kind, IntRange n, IntRange d, Execution exec) {
  const std::size_t cols = n.size();
  return map_indices(
      cols * d.size(),
      [&](std::size_t idx) {
        const int ni = n.first + static_cast<int>(idx % cols);
        const int di = d.first + static_cast<int>(idx / cols);
        switch (kind) {
          case BoundKind::GlVector: return gl_bound_hypersurface(di, ni);
          case BoundKind::Pgl: return pgl_bound(di, ni);
          case BoundKind::Deck: return deck_bound(di, ni);
          case BoundKind::GlGeneral: break;
        }
        throw DomainError("bound_grid: GL_GENERAL takes a multidegree, not a single degree");
      },
      exec);
}

std::vector<CellCheck> check_table(IntRange n, IntRange d, Execution exec) {
  std::vector<BoundReport> reports = bound_grid(BoundKind::Pgl, n, d, exec);
  std::vector<CellCheck> out;
  out.reserve(reports.size());
  for (auto& report : reports) {
    CellCheck cell;
    cell.n = report.n;
    cell.d = report.degrees.front();
    cell.reference = find_reference(cell.n, cell.d);
    if (cell.reference != nullptr) {
      const bool same = report.value == cell.reference->value &&
                        report.factorization == cell.reference->factorization &&
                        (!cell.reference->printed_value || *cell.reference->printed_value == report.value);
      cell.status = same ? CellStatus::Pass : CellStatus::Fail;
    }
    cell.computed = std::move(report);
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::pair<Multidegree, int>> multidegree_grid(int max_entry, int max_k, int max_n_plus_1) {
  std::vector<std::pair<Multidegree, int>> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int lowest) {
    if (!current.empty()) {
      const int k = static_cast<int>(current.size());
      for (int n = k - 1; n + 1 <= max_n_plus_1; ++n) out.emplace_back(Multidegree(current), n);
    }
    if (static_cast<int>(current.size()) == max_k) return;
    for (int d = lowest; d <= max_entry; ++d) {
      current.push_back(d);
      extend(d);
      current.pop_back();
    }
  };
  extend(2);
  return out;
}

std::vector<NAgreementRow> n_agreement_grid(int max_entry, int max_k, int max_n_plus_1, Execution exec) {
  const auto grid = multidegree_grid(max_entry, max_k, max_n_plus_1);
  return map_indices(
      grid.size(),
      [&](std::size_t idx) {
        const auto& [md, n] = grid[idx];
        return NAgreementRow{md, n, n_value(md, n), n_value_closed(md, n), n_value_staircase_oracle(md, n)};
      },
      exec);
}

}  // namespace autbound
