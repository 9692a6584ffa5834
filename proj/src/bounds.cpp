#include "autbound/bounds.hpp"

#include <utility>

namespace autbound {
namespace {

BoundReport finish(BoundKind kind, int n, std::vector<int> degrees, std::vector<Rational> factors) {
  Rational product = 1;
  for (const auto& f : factors) product *= f;
  BoundReport report;
  report.kind = kind;
  report.n = n;
  report.degrees = std::move(degrees);
  report.value = product.to_integer(to_string(kind) + " bound");
  if (report.value < 1) throw InvariantViolation(to_string(kind) + " bound: value is not positive");
  report.factorization = factorize_product(factors);
  if (report.factorization.value() != report.value) {
    throw InvariantViolation(to_string(kind) + " bound: factorization does not reconstruct the value");
  }
  report.factors = std::move(factors);
  return report;
}

Integer ipow(long base, long exp) { return pow(Integer(base), static_cast<unsigned long>(exp)); }

void require_hypersurface_degree(int d) {
  if (d <= 2) throw DomainError("degree must be an integer > 2, got " + std::to_string(d));
}

std::vector<PrimePower> pp(std::initializer_list<std::pair<long, unsigned>> list) {
  std::vector<PrimePower> out;
  for (const auto& [p, e] : list) out.push_back({Integer(p), e});
  return out;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::GlVector: return "GL_VECTOR";
    case BoundKind::GlGeneral: return "GL_GENERAL";
    case BoundKind::Pgl: return "PGL";
    case BoundKind::Deck: return "DECK";
  }
  return "UNKNOWN";
}

BoundReport gl_bound_hypersurface(int d, int n) {
  require_hypersurface_degree(d);
  if (n < 0) throw DomainError("n must be non-negative");
  std::vector<Rational> factors;
  for (int i = 0; i <= n; ++i) {
    factors.emplace_back(Integer((sign_power(n - i) + ipow(d - 1, n - i + 1)) * ipow(d - 1, i)));
  }
  return finish(BoundKind::GlVector, n, {d}, std::move(factors));
}

BoundReport gl_bound_general(const Multidegree& md, int n) {
  if (md.is_single_quadric()) throw DomainError("the multidegree (2) is excluded");
  if (n < 0 || md.k() > n + 1) throw DomainError("requires 1 <= k <= n + 1");
  std::vector<Rational> factors;
  for (const Integer& m : multipliers(md, n)) factors.emplace_back(m);
  BoundReport report = finish(BoundKind::GlGeneral, n, {md.degrees().begin(), md.degrees().end()}, std::move(factors));
  if (md.k() == n + 1) {
    Integer product = 1;
    for (int d : md.degrees()) product *= d;
    if (report.value != pow(product, static_cast<unsigned long>(n + 1))) {
      throw InvariantViolation("GL_GENERAL bound: k = n + 1 product differs from (d_1...d_k)^{n+1}");
    }
  }
  return report;
}

BoundReport pgl_bound(int d, int n) {
  require_hypersurface_degree(d);
  if (n < 1) throw DomainError("n must be >= 1");
  const Integer sigma = Integer(n + 1) * ipow(d - 1, n);
  std::vector<Rational> factors;
  factors.emplace_back(Integer(1), Integer(n + 1));
  for (int i = 0; i <= n - 1; ++i) {
    const Integer c = binomial(n + 1, i);
    const Integer head = sign_power(n - i) + ipow(d - 1, n - i + 1);
    factors.emplace_back(head * lcm(c * ipow(d - 1, i), sigma), c);
  }
  return finish(BoundKind::Pgl, n, {d}, std::move(factors));
}

Integer pgl_bound_closed(int n, int d) {
  require_hypersurface_degree(d);
  const Integer D = d;
  const Integer q2 = D * D - 3 * D + 3;
  const Integer q3 = D * D * D - 4 * D * D + 6 * D - 4;
  const Integer q4 = D * D * D * D - 5 * D * D * D + 10 * D * D - 10 * D + 5;
  switch (n) {
    case 2:
      return pow(D, 2) * pow(D - 1, 4) * q2 * (D - 2);
    case 3:
      return Rational(pow(D, 3) * pow(D - 1, 8) * q3 * q2 * (D - 2) * lcm(3, 2 * (D - 1)), 3)
          .to_integer("closed PGL bound, n = 3");
    case 4:
      return Rational(pow(D, 4) * pow(D - 1, 13) * q4 * q3 * q2 * (D - 2) * lcm(2, pow(D - 1, 2)) * lcm(2, D - 1), 4)
          .to_integer("closed PGL bound, n = 4");
    default:
      throw DomainError("closed forms exist only for n in {2, 3, 4}, got " + std::to_string(n));
  }
}

BoundReport deck_bound(int d, int n) {
  if (d < 2) throw DomainError("deck bound requires d >= 2");
  if (n < 1) throw DomainError("deck bound requires n >= 1");
  std::vector<Rational> factors;
  factors.emplace_back(ipow(d, static_cast<long>(n) * n - 1));
  for (int i = 2; i <= n + 1; ++i) {
    const Integer c = binomial(n + 1, i);
    factors.emplace_back(lcm(c, Integer(n + 1) * ipow(d, i - 1)), c);
  }
  return finish(BoundKind::Deck, n, {d}, std::move(factors));
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = [] {
    struct Row {
      int n;
      int d;
      std::vector<PrimePower> factors;
      long printed;  // 0 when the cell prints only the factorization
    };
    const std::vector<Row> rows = {
        {2, 3, pp({{2, 4}, {3, 3}}), 432},
        {3, 3, pp({{2, 10}, {3, 4}, {5, 1}}), 414720},
        {4, 3, pp({{2, 14}, {3, 5}, {5, 1}, {11, 1}}), 218972160},
        {2, 4, pp({{2, 5}, {3, 4}, {7, 1}}), 18144},
        {3, 4, pp({{2, 10}, {3, 8}, {5, 1}, {7, 1}}), 0},
        {4, 4, pp({{2, 11}, {3, 16}, {5, 1}, {7, 1}, {61, 1}}), 0},
        {2, 5, pp({{2, 8}, {3, 1}, {5, 2}, {13, 1}}), 0},
        {3, 5, pp({{2, 19}, {3, 2}, {5, 3}, {13, 1}, {17, 1}}), 0},
        {4, 5, pp({{2, 30}, {3, 2}, {5, 5}, {13, 1}, {17, 1}, {41, 1}}), 0},
        {2, 6, pp({{2, 4}, {3, 3}, {5, 4}, {7, 1}}), 0},
        {3, 6, pp({{2, 9}, {3, 4}, {5, 9}, {7, 1}, {13, 1}}), 0},
        {4, 6, pp({{2, 9}, {3, 5}, {5, 16}, {7, 1}, {13, 1}, {521, 1}}), 0},
        {2, 7, pp({{2, 4}, {3, 4}, {5, 1}, {7, 2}, {31, 1}}), 0},
        {3, 7, pp({{2, 10}, {3, 8}, {5, 2}, {7, 3}, {31, 1}, {37, 1}}), 0},
        {4, 7, pp({{2, 14}, {3, 16}, {5, 2}, {7, 4}, {11, 1}, {31, 1}, {37, 1}, {101, 1}}), 0},
        {2, 8, pp({{2, 7}, {3, 1}, {7, 4}, {43, 1}}), 0},
        {3, 8, pp({{2, 13}, {3, 2}, {5, 2}, {7, 9}, {43, 1}}), 0},
        {4, 8, pp({{2, 15}, {3, 2}, {5, 2}, {7, 16}, {11, 1}, {43, 1}, {191, 1}}), 0},
        {2, 9, pp({{2, 12}, {3, 5}, {7, 1}, {19, 1}}), 0},
        {3, 9, pp({{2, 28}, {3, 7}, {5, 1}, {7, 2}, {13, 1}, {19, 1}}), 0},
        {4, 9, pp({{2, 46}, {3, 9}, {5, 1}, {7, 2}, {11, 1}, {13, 1}, {19, 1}, {331, 1}}), 0},
        {2, 10, pp({{2, 5}, {3, 8}, {5, 2}, {73, 1}}), 0},
        {3, 10, pp({{2, 11}, {3, 17}, {5, 3}, {41, 1}, {73, 1}}), 0},
        {4, 10, pp({{2, 11}, {3, 32}, {5, 5}, {41, 1}, {73, 1}, {1181, 1}}), 0},
    };
    std::vector<ReferenceEntry> out;
    for (const auto& row : rows) {
      ReferenceEntry e;
      e.n = row.n;
      e.d = row.d;
      e.factorization = Factorization(row.factors);
      e.value = e.factorization.value();
      if (row.printed != 0) e.printed_value = Integer(row.printed);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return table;
}

const ReferenceEntry* find_reference(int n, int d) {
  for (const auto& e : reference_table()) {
    if (e.n == n && e.d == d) return &e;
  }
  return nullptr;
}

}  // namespace autbound
