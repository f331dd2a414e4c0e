#include "shascope/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace shascope {

BigRat make_rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("zero denominator");
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

BigInt Factorization::product() const {
  BigInt out = sign;
  for (const auto& pp : factors) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    out *= pw;
  }
  return out * unfactored;
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

IncompleteFactorization::IncompleteFactorization(BigInt n, Factorization partial)
    : BudgetError("incomplete factorization of " + n.get_str() + ": unfactored cofactor " +
                  partial.unfactored.get_str()),
      input_(std::move(n)),
      partial_(std::move(partial)) {}

namespace {

constexpr std::array<unsigned, 13> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Extra fixed bases used above the deterministic bound (error <= 4^-24 per composite).
constexpr std::array<unsigned, 11> kExtraBases = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

bool mr_round(const BigInt& n, const BigInt& d, unsigned s, unsigned base) {
  BigInt a = base;
  if (a % n == 0) return true;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

PrimalityVerdict primality(const BigInt& n) {
  if (n <= 1) throw DomainError("primality test requires n > 1");
  for (unsigned b : kMrBases) {
    if (n == b) return {true, true};
    if (n % b == 0) return {false, true};
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : kMrBases)
    if (!mr_round(n, d, s, b)) return {false, true};
  if (n < deterministic_mr_bound()) return {true, true};
  for (unsigned b : kExtraBases)
    if (!mr_round(n, d, s, b)) return {false, true};
  return {true, false};
}

bool is_prime(const BigInt& n) { return primality(n).prime; }

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 on budget exhaustion.
BigInt brent_rho(const BigInt& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned c = 1; c < 64 && budget > 0; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = q * abs(BigInt(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        if (budget <= lim) {
          budget = 0;
          break;
        }
        budget -= lim;
      }
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt diff = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace

Factorization factorize_partial(const BigInt& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  BigInt m = abs(n);
  std::map<BigInt, PrimePower> found;
  auto add = [&](const BigInt& p, unsigned e, bool cert) {
    auto& slot = found[p];
    slot.prime = p;
    slot.exponent += e;
    slot.certified = slot.certified && cert;
  };

  for (std::uint64_t p = 2; p <= budget.trial_limit; p += (p == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (p > 4294967295ULL || mpz_cmp_ui(m.get_mpz_t(), static_cast<unsigned long>(p * p)) < 0) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    BigInt pp = static_cast<unsigned long>(p);
    unsigned e = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
    if (e) add(pp, e, true);
  }

  BigInt leftover = 1;
  std::uint64_t rho_budget = budget.rho_iterations;
  std::vector<BigInt> stack;
  if (m != 1) stack.push_back(m);
  while (!stack.empty()) {
    BigInt c = stack.back();
    stack.pop_back();
    if (c == 1) continue;
    PrimalityVerdict v = primality(c);
    if (v.prime) {
      add(c, 1, v.proven);
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      // Split perfect powers via their integer root.
      for (unsigned k = 2;; ++k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k)) {
          for (unsigned i = 0; i < k; ++i) stack.push_back(root);
          break;
        }
      }
      continue;
    }
    BigInt d = rho_budget ? brent_rho(c, rho_budget) : BigInt(0);
    if (d == 0) {
      leftover *= c;
      continue;
    }
    stack.push_back(d);
    stack.push_back(c / d);
  }
  for (auto& [p, pp] : found) out.factors.push_back(pp);
  out.unfactored = leftover;
  return out;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  Factorization f = factorize_partial(n, budget);
  if (!f.complete()) throw IncompleteFactorization(n, f);
  return f;
}

unsigned padic_val(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero is infinite");
  if (p < 2) throw DomainError("valuation base must be prime");
  BigInt m = n;
  return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

long padic_val(const BigRat& r, const BigInt& p) {
  if (r == 0) throw DomainError("valuation of zero is infinite");
  return static_cast<long>(padic_val(BigInt(r.get_num()), p)) -
         static_cast<long>(padic_val(BigInt(r.get_den()), p));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string to_string(const BigInt& n) { return n.get_str(); }
std::string to_string(const BigRat& r) { return r.get_str(); }

BigInt parse_bigint(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  std::size_t j = s.size();
  while (j > i && s[j - 1] == ' ') --j;
  std::string t = s.substr(i, j - i);
  std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (k == t.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t q = k; q < t.size(); ++q)
    if (t[q] < '0' || t[q] > '9') throw DomainError("not an integer: '" + s + "'");
  if (t[0] == '+') t.erase(0, 1);
  return BigInt(t, 10);
}

}  // namespace shascope
