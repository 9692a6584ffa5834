#include "autbound/discriminant.hpp"

#include "autbound/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace autbound {
namespace {

void check_degrees(std::span<const int> degrees) {
  if (degrees.empty()) throw DomainError("multidegree must contain at least one degree");
  for (int d : degrees) {
    if (d < 2) throw DomainError("every degree must be >= 2, got " + std::to_string(d));
  }
}

void check_regime(int k, int n) {
  if (n < 0) throw DomainError("n must be non-negative, got " + std::to_string(n));
  if (k > n + 1) {
    throw DomainError("k = " + std::to_string(k) + " exceeds n + 1 = " + std::to_string(n + 1));
  }
}

// m_i from the two-branch formula. Defined for every multidegree including
// (2); callers decide whether (2) is admissible.
Integer multiplier_formula(std::span<const int> degrees, int n, int i) {
  const int k = static_cast<int>(degrees.size());
  check_regime(k, n);
  if (i < 1 || i > n + 1) {
    throw DomainError("multiplier index i = " + std::to_string(i) + " outside 1.." + std::to_string(n + 1));
  }
  StaircaseTable table(degrees, n - k);
  const Integer& top = table.n_value(n);
  if (i >= n - k + 2) return top + sign_power(n - k + 1);
  // The branch condition i <= n - k + 1 keeps N(d, n - i) inside k <= (n - i) + 1.
  if (k > n - i + 1) throw InvariantViolation("multiplier: N(d, n - i) evaluated outside k <= n - i + 1");
  return top + sign_power(i + 1) * table.n_value(n - i);
}

Integer enumerate_staircases(std::span<const int> degrees, int a, int b) {
  const int k = static_cast<int>(degrees.size());
  const int w = degrees[static_cast<std::size_t>(k - a)];
  // Vertical segment (a, b) -> (a, b - 1); reaching row -2 ends the staircase.
  Integer total = (b - 1 == -2) ? Integer(w - 1) : Integer(w - 1) * enumerate_staircases(degrees, a, b - 1);
  // Horizontal segment (a, b) -> (a - 1, b); column 0 is not part of the table.
  if (a > 1) total += Integer(w) * enumerate_staircases(degrees, a - 1, b);
  return total;
}

}  // namespace

Multidegree::Multidegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  check_degrees(degrees_);
  std::sort(degrees_.begin(), degrees_.end());
}

Multidegree Multidegree::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("malformed multidegree '" + text + "'");
    }
    if (pos != item.size()) throw DomainError("malformed multidegree '" + text + "'");
    out.push_back(value);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) throw DomainError("malformed multidegree '" + text + "'");
  return Multidegree(std::move(out));
}

Multidegree Multidegree::tail() const {
  if (degrees_.size() < 2) throw DomainError("tail: multidegree has a single entry");
  return Multidegree(std::vector<int>(degrees_.begin() + 1, degrees_.end()));
}

std::string Multidegree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(degrees_[i]);
  }
  return out;
}

StaircaseTable::StaircaseTable(std::span<const int> degrees, int top_row)
    : k_(static_cast<int>(degrees.size())), top_(top_row) {
  check_degrees(degrees);
  if (top_row < -2) throw DomainError("StaircaseTable: top row must be >= -2");
  const int rows = top_ + 3;
  cells_.assign(static_cast<std::size_t>((k_ + 1) * rows), Integer(0));
  auto cell = [&](int a, int b) -> Integer& { return cells_[static_cast<std::size_t>(a * rows + (b + 2))]; };
  for (int a = 1; a <= k_; ++a) {
    const int w = degrees[static_cast<std::size_t>(k_ - a)];
    cell(a, -2) = 1;
    for (int b = -1; b <= top_; ++b) cell(a, b) = (w - 1) * cell(a, b - 1) + w * cell(a - 1, b);
  }
}

const Integer& StaircaseTable::entry(int a, int b) const {
  if (a < 0 || a > k_ || b < -2 || b > top_) throw DomainError("StaircaseTable: entry out of range");
  return cells_[static_cast<std::size_t>(a * (top_ + 3) + (b + 2))];
}

const Integer& StaircaseTable::n_value(int n) const {
  check_regime(k_, n);
  return entry(k_, n - k_);
}

Integer n_value(const Multidegree& md, int n) { return n_value_unsorted(md.degrees(), n); }

Integer n_value_unsorted(std::span<const int> degrees, int n) {
  check_degrees(degrees);
  const int k = static_cast<int>(degrees.size());
  check_regime(k, n);
  return StaircaseTable(degrees, n - k).n_value(n);
}

Integer n_value_closed(const Multidegree& md, int n) {
  const int k = md.k();
  check_regime(k, n);
  const auto d = md.degrees();
  Integer total = pow(Integer(d[0] - 1), static_cast<unsigned long>(n - k + 2));
  Integer prefix = 1;  // d_1 ... d_{i-1}
  std::vector<Integer> shifted;
  shifted.push_back(d[0] - 1);
  for (int i = 2; i <= k; ++i) {
    const int di = d[static_cast<std::size_t>(i - 1)];
    prefix *= d[static_cast<std::size_t>(i - 2)];
    shifted.push_back(di - 1);
    total += prefix * (di - 1) * rational_product_coefficient(shifted, static_cast<std::size_t>(n - k + 1));
  }
  return total;
}

Integer n_value_staircase_oracle(const Multidegree& md, int n) {
  const int k = md.k();
  check_regime(k, n);
  if (k + n > kStaircaseBudget) {
    throw DomainError("staircase enumeration budget exceeded (k + n = " + std::to_string(k + n) + " > " +
                      std::to_string(kStaircaseBudget) + "); use the recursive method");
  }
  return enumerate_staircases(md.degrees(), k, n - k);
}

Integer multiplier(const Multidegree& md, int n, int i) {
  if (md.is_single_quadric()) throw DomainError("multiplier: undefined for the multidegree (2)");
  return multiplier_formula(md.degrees(), n, i);
}

std::vector<Integer> multipliers(const Multidegree& md, int n) {
  std::vector<Integer> out;
  for (int i = 1; i <= n + 1; ++i) out.push_back(multiplier(md, n, i));
  return out;
}

bool multiplier_suspension_check(const Multidegree& md, int n, int i) {
  if (md.is_single_quadric()) throw DomainError("multiplier: undefined for the multidegree (2)");
  const int k = md.k();
  check_regime(k, n);
  if (n < 1) throw DomainError("suspension check requires n >= 1");
  if (i < 1 || i > n) throw DomainError("suspension check requires 1 <= i <= n");

  const Integer lhs = multiplier_formula(md.degrees(), n, i);
  Integer rhs = 0;
  if (k > 1) {
    // d' may be (2); the formula is still defined there.
    const auto d = md.degrees();
    rhs += Integer(md.front()) * multiplier_formula(d.subspan(1), n - 1, i);
  }
  if (k < n + 1) rhs += Integer(md.front() - 1) * multiplier_formula(md.degrees(), n - 1, i);
  return lhs == rhs;
}

}  // namespace autbound
