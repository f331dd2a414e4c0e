#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shascope/curves.hpp"
#include "shascope/poly.hpp"

namespace shascope {

using QPoly = ExactPoly<BigRat>;

// Squarefreeness over Q: a modular certificate (gcd(g mod q, g' mod q) = 1 for a prime q
// not dividing the leading coefficient) with an exact Euclidean fallback.
bool is_squarefree(const QPoly& g);

// Q[X]/(g) for a squarefree polynomial g, stored monic.
class QuotRing {
 public:
  explicit QuotRing(const QPoly& g);
  const QPoly& modulus() const { return g_; }
  int degree() const { return g_.degree(); }
  QPoly reduce(const QPoly& a) const { return poly_mod(a, g_); }
  QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
  // Power sums p_0 .. p_{d-1} of the roots of g.
  const std::vector<BigRat>& power_sums() const { return ps_; }

 private:
  QPoly g_;
  std::vector<BigRat> ps_;
};

class NotInvertible : public DomainError {
 public:
  explicit NotInvertible(QPoly common);
  const QPoly& common_factor() const { return common_; }

 private:
  QPoly common_;
};

// Sum over the roots r of the modulus of elem(r).
BigRat trace_in_ring(const QuotRing& ring, const QPoly& elem);
QPoly invert_mod(const QuotRing& ring, const QPoly& elem);

bool cor6_check(const ShortModel& m, unsigned ell, unsigned n);
// Coefficient of X^(l^2-1) in Phi_l(X, lambda) against -l^2 lambda, lambda rational.
bool cor7_check(const ShortModel& m, unsigned ell, const BigRat& lambda);
// Same with lambda a free symbol.
bool cor7_check_symbolic(const ShortModel& m, unsigned ell);

struct AlphaTraceResult {
  unsigned ell = 0, n = 0;
  BigRat S;          // root-sum of alpha divided by the degree
  BigRat root_sum;   // root-sum of alpha over the roots of g_{l^n}
  unsigned degree = 0;
  // |S|_q <= C_{*,q} for every prime q != l; only primes of the denominator can fail.
  bool finite_bounds_hold() const;
};

// alpha = l^3 disc' / psi(x) summed over the roots x of g_{l^n}, n in {1, 2}.
AlphaTraceResult alpha_trace_direct(const ShortModel& m, unsigned ell, unsigned n);

// Level-2 value of S assembled from level-1 data through the multiplication-by-l
// fibres above the roots of psi; see docs/alpha-trace.md.
BigRat alpha_trace_step8(const ShortModel& m, unsigned ell);

// 1/psi'(e) at each rational root e of a cubic with three rational roots.
std::vector<BigRat> cubic_residues_rational(const QPoly& psi);

struct BoundConstant {
  bool archimedean = false;
  BigRat exact;         // finite places
  double value = 0;     // archimedean value (double approximation)
  std::string decimal;  // archimedean value, 30 significant digits
  std::string delta;    // certified lower bound for the root distance
};

// C_{*,q}: q == 0 denotes the archimedean place.
BoundConstant bound_constants(const ShortModel& m, unsigned ell, unsigned long q);

}  // namespace shascope
