#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "shascope/poly.hpp"

namespace shascope {

// Degree of f_n: (n^2-1)/2 for odd n, (n^2-4)/2 for even n.
inline std::size_t fn_degree(std::size_t n) { return n % 2 ? (n * n - 1) / 2 : (n * n - 4) / 2; }

// Memoized reduced division polynomials f_n over a coefficient ring T, for the
// curve Y^2 = X^3 + A X + B. Psi_n = f_n for odd n and f_n * Y for even n.
// Extending the table mutates it; concurrent extension needs external locking.
template <class T>
class DivisionTable {
 public:
  static constexpr std::size_t kDefaultCeiling = 700;

  DivisionTable(T a, T b, std::size_t degree_ceiling = kDefaultCeiling)
      : a_(std::move(a)), b_(std::move(b)), ceiling_(degree_ceiling) {}

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  std::size_t ceiling() const { return ceiling_; }

  T one() const { return ring_int(a_, 1); }
  T num(long n) const { return ring_int(a_, n); }
  ExactPoly<T> x() const { return ExactPoly<T>::monomial(one(), 1); }

  // X^3 + A X + B
  ExactPoly<T> cubic() const { return ExactPoly<T>(std::vector<T>{b_, a_, T{}, one()}); }

  const ExactPoly<T>& f(std::size_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    if (fn_degree(n) > ceiling_ && n > 1)
      throw BudgetError("division polynomial f_" + std::to_string(n) + " exceeds the degree ceiling " +
                        std::to_string(ceiling_));
    ExactPoly<T> v = compute(n);
    return memo_.emplace(n, std::move(v)).first->second;
  }

 private:
  ExactPoly<T> compute(std::size_t n) {
    const T A = a_, B = b_;
    switch (n) {
      case 0:
        return {};
      case 1:
        return ExactPoly<T>::constant(one());
      case 2:
        return ExactPoly<T>::constant(num(2));
      case 3:
        return ExactPoly<T>(std::vector<T>{-(A * A), num(12) * B, num(6) * A, T{}, num(3)});
      case 4:
        return ExactPoly<T>(std::vector<T>{num(-32) * B * B - num(4) * A * A * A, num(-16) * A * B,
                                           num(-20) * A * A, num(80) * B, num(20) * A, T{}, num(4)});
      default:
        break;
    }
    const std::size_t m = n / 2;
    ExactPoly<T> psi2 = cubic() * cubic();
    if (n % 2 == 0) {
      // Psi_{2m} = Psi_m (Psi_{m+2} Psi_{m-1}^2 - Psi_{m-2} Psi_{m+1}^2) / (2Y); the Y powers cancel.
      ExactPoly<T> fm1 = f(m - 1), fp1 = f(m + 1);
      ExactPoly<T> inner = f(m + 2) * fm1 * fm1 - f(m - 2) * fp1 * fp1;
      return (f(m) * inner).divexact(num(2));
    }
    // Psi_{2m+1} = Psi_{m+2} Psi_m^3 - Psi_{m-1} Psi_{m+1}^3 with Y^4 = psi^2 on the even-index side.
    ExactPoly<T> fm = f(m), fp1 = f(m + 1);
    ExactPoly<T> first = f(m + 2) * fm * fm * fm;
    ExactPoly<T> second = fp1 * fp1 * fp1 * f(m - 1);
    if (m % 2 == 0) return first * psi2 - second;
    return first - second * psi2;
  }

  T a_, b_;
  std::size_t ceiling_;
  std::map<std::size_t, ExactPoly<T>> memo_;
};

// Lemma-style degree/leading/sub-leading law for f_n.
template <class T>
bool check_lemma5(DivisionTable<T>& t, std::size_t n) {
  const auto& f = t.f(n);
  std::size_t d = fn_degree(n);
  if (f.degree() != static_cast<int>(d)) return false;
  if (!(f.leading() == t.num(static_cast<long>(n)))) return false;
  if (d == 0) return true;
  return is_zero(f.coeff(d - 1));
}

// (Psi'_n)^2 as a polynomial in X, with Y^2 replaced by the cubic.
template <class T>
ExactPoly<T> psi_squared(DivisionTable<T>& t, std::size_t n) {
  const auto& f = t.f(n);
  ExactPoly<T> sq = f * f;
  return n % 2 ? sq : sq * t.cubic();
}

// Exact quotient g_{l^n} = f_{l^n} / f_{l^(n-1)}.
template <class T>
ExactPoly<T> quotient_g(DivisionTable<T>& t, std::size_t ell, std::size_t n) {
  if (ell < 3) throw DomainError("quotient_g requires an odd prime");
  if (n < 1) throw DomainError("quotient_g requires n >= 1");
  std::size_t hi = 1;
  for (std::size_t i = 0; i < n; ++i) hi *= ell;
  return exact_quotient(t.f(hi), t.f(hi / ell));
}

// Phi_m(X, lambda) = (X - lambda) (Psi'_m)^2 - Psi'_{m-1} Psi'_{m+1}.
template <class T>
ExactPoly<T> build_phi(DivisionTable<T>& t, std::size_t m, const T& lambda) {
  if (m < 1) throw DomainError("build_phi requires m >= 1");
  ExactPoly<T> lin(std::vector<T>{-lambda, t.one()});
  ExactPoly<T> cross = t.f(m - 1) * t.f(m + 1);
  // Exactly one of m-1, m+1 is odd when m is even; both even when m is odd.
  if (m % 2 == 1) cross = cross * t.cubic();
  return lin * psi_squared(t, m) - cross;
}

// The auxiliary polynomials f, phi, g, psi with f*phi - g*psi = 4A^3 + 27B^2.
template <class T>
struct Eq46Terms {
  ExactPoly<T> f, phi, g, psi;
  T disc;
};

template <class T>
Eq46Terms<T> eq46_terms(const T& a, const T& b) {
  T one = ring_int(a, 1);
  auto n = [&](long v) { return ring_int(a, v); };
  Eq46Terms<T> r;
  r.f = ExactPoly<T>(std::vector<T>{n(4) * a, T{}, n(3)});
  r.phi = ExactPoly<T>(std::vector<T>{a * a, n(-8) * b, n(-2) * a, T{}, one});
  r.g = ExactPoly<T>(std::vector<T>{n(-27) * b, n(-5) * a, T{}, n(3)});
  r.psi = ExactPoly<T>(std::vector<T>{b, a, T{}, one});
  r.disc = n(4) * a * a * a + n(27) * b * b;
  return r;
}

template <class T>
bool verify_eq46(const T& a, const T& b) {
  auto e = eq46_terms(a, b);
  return e.f * e.phi - e.g * e.psi == ExactPoly<T>::constant(e.disc);
}

class PointIsTorsion : public DomainError {
 public:
  explicit PointIsTorsion(long a) : DomainError("point is " + std::to_string(a) + "-torsion"), order_divisor(a) {}
  long order_divisor;
};

// Psi'_k evaluated at an affine point: f_k(x) times y for even k.
template <class T>
T psi_at(DivisionTable<T>& t, std::size_t k, const T& x, const T& y) {
  T v = t.f(k).eval(x);
  return k % 2 ? v : v * y;
}

// [a]P by the division-polynomial formulas; T must be a field.
template <class T>
std::pair<T, T> mul_point_formula(DivisionTable<T>& t, const T& x, const T& y, long a) {
  if (a < 1) throw DomainError("multiplier must be positive");
  if (a == 1) return {x, y};
  std::size_t n = static_cast<std::size_t>(a);
  T pa = psi_at(t, n, x, y);
  if (is_zero(pa)) throw PointIsTorsion(a);
  if (is_zero(y)) return {x, y};  // odd a on a 2-torsion point
  T pa2 = pa * pa;
  T xn = x - psi_at(t, n - 1, x, y) * psi_at(t, n + 1, x, y) * inverse(pa2);
  T pm1 = psi_at(t, n - 1, x, y), pp1 = psi_at(t, n + 1, x, y);
  T num = psi_at(t, n + 2, x, y) * pm1 * pm1 - psi_at(t, n - 2, x, y) * pp1 * pp1;
  T yn = num * inverse(t.num(4) * y * pa2 * pa);
  return {xn, yn};
}

// [n]P = O test for an affine point P.
template <class T>
bool torsion_test(DivisionTable<T>& t, const T& x, const T& y, std::size_t n) {
  if (n == 0) return true;
  if (!is_zero(y)) return is_zero(t.f(n).eval(x));
  T p = psi_at(t, n, x, y);
  return is_zero(T(p * p));
}

}  // namespace shascope
