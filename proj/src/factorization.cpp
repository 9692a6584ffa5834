#include "autbound/factorization.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

namespace autbound {
namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// The first 13 primes already form a deterministic witness set below 3.317e24.
constexpr std::array<unsigned long, 20> kWitnesses = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                      31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

bool strong_probable_prime(const Integer& n, unsigned long base) {
  const Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer x;
  const Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long c) {
  auto step = [&](const Integer& v) {
    Integer next = v * v + c;
    mpz_mod(next.get_mpz_t(), next.get_mpz_t(), n.get_mpz_t());
    return next;
  };
  constexpr unsigned long kBatch = 128;
  Integer x, y = 2, ys, q = 1, g = 1;
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // rho needs ~sqrt(p) steps to split p^k, so take perfect powers apart first.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Integer, unsigned> inner;
      split_into(root, inner);
      for (const auto& [p, e] : inner) out[p] += e * static_cast<unsigned>(k);
      return;
    }
  }
  for (unsigned long c = 1;; ++c) {
    Integer g = pollard_brent(n, c);
    if (g != n) {
      split_into(g, out);
      split_into(n / g, out);
      return;
    }
  }
}

std::string exponent_text(unsigned e, FactorStyle style) {
  std::string digits = std::to_string(e);
  if (style == FactorStyle::Latex && digits.size() > 1) return "^{" + digits + "}";
  return "^" + digits;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("Factorization: zero exponent");
    if (i > 0 && factors_[i].prime <= factors_[i - 1].prime) {
      throw DomainError("Factorization: primes must be strictly increasing");
    }
    if (!is_prime(factors_[i].prime)) {
      throw DomainError("Factorization: " + autbound::to_string(factors_[i].prime) + " is not prime");
    }
  }
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& [p, e] : factors_) v *= pow(p, e);
  return v;
}

std::string Factorization::to_string(FactorStyle style) const {
  if (factors_.empty()) return "1";
  const char* sep = style == FactorStyle::Text ? " · " : style == FactorStyle::Compact ? "·" : "\\cdot ";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += sep;
    out += autbound::to_string(factors_[i].prime);
    if (factors_[i].exponent > 1) out += exponent_text(factors_[i].exponent, style);
  }
  return out;
}

bool is_prime(const Integer& v) {
  if (v < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (v == p) return true;
    if (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) return false;
  }
  for (unsigned long base : kWitnesses) {
    if (!strong_probable_prime(v, base)) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (v < kDeterministicBound) return true;
  return mpz_probab_prime_p(v.get_mpz_t(), 25) != 0;
}

Factorization factorize(const Integer& v) {
  if (v < 2) throw DomainError("factorize: value must be >= 2, got " + to_string(v));
  std::map<Integer, unsigned> exps;
  Integer rest = v;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exps[Integer(p)];
    }
  }
  split_into(rest, exps);

  std::vector<PrimePower> factors;
  factors.reserve(exps.size());
  for (auto& [p, e] : exps) factors.push_back({p, e});
  return Factorization(std::move(factors));
}

Factorization factorize_product(std::span<const Rational> factors) {
  std::map<Integer, long> exps;
  int sign = 1;
  auto accumulate = [&](const Integer& v, long direction) {
    if (v == 0) throw InvariantViolation("factorize_product: zero factor");
    if (v < 0) sign = -sign;
    Integer mag = abs(v);
    if (mag == 1) return;
    const Factorization f = factorize(mag);
    for (const auto& [p, e] : f.factors()) exps[p] += direction * static_cast<long>(e);
  };
  for (const auto& f : factors) {
    accumulate(f.numerator(), +1);
    accumulate(f.denominator(), -1);
  }
  if (sign < 0) throw InvariantViolation("factorize_product: product is negative");

  std::vector<PrimePower> out;
  for (const auto& [p, e] : exps) {
    if (e < 0) throw InvariantViolation("factorize_product: product is not an integer (prime " + to_string(p) + ")");
    if (e > 0) out.push_back({p, static_cast<unsigned>(e)});
  }
  return Factorization(std::move(out));
}

}  // namespace autbound
