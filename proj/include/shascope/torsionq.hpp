#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shascope/curves.hpp"

namespace shascope {

struct QPoint {
  bool infinity = true;
  BigRat x, y;
  static QPoint at_infinity() { return {}; }
  static QPoint affine(BigRat x, BigRat y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const QPoint&, const QPoint&) = default;
};

QPoint q_add(const ShortModel& m, const QPoint& P, const QPoint& Q);
bool q_on_curve(const ShortModel& m, const QPoint& P);

struct TorsionPoint {
  BigInt x, y;
  unsigned order = 0;
};

struct TorsionGroup {
  // (n1, n2) with E_tors = Z/n1 x Z/n2, n1 | n2; (1,1) is trivial.
  unsigned n1 = 1, n2 = 1;
  // Affine torsion points sorted by (x, y); the identity is implicit.
  std::vector<TorsionPoint> points;
  unsigned order() const { return n1 * n2; }
  std::string structure() const;
};

// Integer roots of the monic cubic X^3 + a X + c, ascending.
std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& a, const BigInt& c);

// Lutz-Nagell candidate points: integral x with y = 0 or y^2 | 4A^3+27B^2.
std::vector<std::pair<BigInt, BigInt>> torsion_candidates(const ShortModel& m, const FactorBudget& budget = {});

TorsionGroup rational_torsion(const ShortModel& m, const FactorBudget& budget = {});

// True iff reduction mod p maps E[m](Q) injectively and order-preservingly into E~(F_p).
bool torsion_injection_check(const ShortModel& m, std::uint64_t p, std::uint64_t mult);

// gcd of #E~(F_p) over the first `count` good primes 5 <= p < limit.
std::uint64_t reduction_torsion_bound(const ShortModel& m, unsigned count = 3, std::uint64_t limit = 100);

bool mazur_admissible(unsigned n1, unsigned n2);

}  // namespace shascope
