#pragma once

// Text, JSON, CSV and LaTeX renderings of computed results. All integers
// in JSON are emitted as decimal strings.
//
// JSON schema of a bound:
//   {"kind", "n", "degrees": [..], "value", "factorization": [[p, e], ..],
//    "factors": [..]}

#include "autbound/bounds.hpp"
#include "autbound/sweep.hpp"

#include <string>
#include <utility>
#include <vector>

namespace autbound {

enum class OutputFormat { Text, Json, Csv, Latex };

/// "text" | "json" | "csv" | "latex"; throws DomainError otherwise.
OutputFormat parse_format(const std::string& name);

std::string render_bound(const BoundReport& report, OutputFormat format, bool factorize);

/// Grid of PGL bounds, rows d and columns n. With `check`, per-cell status
/// and a PASS summary are included.
std::string render_table(const std::vector<CellCheck>& cells, IntRange n, IntRange d, OutputFormat format,
                         bool check);

/// One or more named integer results for a single input, e.g.
/// N by several methods or a list of multipliers.
struct NamedValues {
  std::string kind;
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::pair<std::string, Integer>> values;
};

/// Text renders a lone value bare ("13") and several as "a=1 b=2".
std::string render_values(const NamedValues& values, OutputFormat format);

std::string render_factorization(const Integer& value, const Factorization& f, OutputFormat format);

}  // namespace autbound
