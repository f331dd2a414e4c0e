#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "shascope/errors.hpp"

namespace shascope {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Builds n/d in lowest terms with positive denominator.
BigRat make_rat(const BigInt& n, const BigInt& d);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  // False only when the prime exceeds the deterministic Miller-Rabin range.
  bool certified = true;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
  // Composite part left unsplit by an exhausted budget; 1 when complete.
  BigInt unfactored = 1;

  bool complete() const { return unfactored == 1; }
  BigInt product() const;
  std::vector<BigInt> primes() const;
};

struct FactorBudget {
  std::uint64_t trial_limit = 1000000;
  // Total Pollard-rho iterations across all cofactors.
  std::uint64_t rho_iterations = 20000000;
};

class IncompleteFactorization : public BudgetError {
 public:
  IncompleteFactorization(BigInt n, Factorization partial);
  const BigInt& input() const { return input_; }
  const Factorization& partial() const { return partial_; }
  const BigInt& cofactor() const { return partial_.unfactored; }

 private:
  BigInt input_;
  Factorization partial_;
};

struct PrimalityVerdict {
  bool prime = false;
  // True when the verdict is a proof (n below the deterministic bound).
  bool proven = true;
};

// Miller-Rabin with the first 13 prime bases, deterministic below this bound.
const BigInt& deterministic_mr_bound();

PrimalityVerdict primality(const BigInt& n);
bool is_prime(const BigInt& n);

Factorization factorize(const BigInt& n, const FactorBudget& budget = {});
// Like factorize but returns the partial result instead of throwing.
Factorization factorize_partial(const BigInt& n, const FactorBudget& budget = {});

unsigned padic_val(const BigInt& n, const BigInt& p);
// Valuation of a nonzero rational; may be negative.
long padic_val(const BigRat& r, const BigInt& p);

// Primes up to limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& r);
BigInt parse_bigint(const std::string& s);

}  // namespace shascope
