#include "shascope/torsionq.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "shascope/divpoly.hpp"
#include "shascope/ffcurve.hpp"

namespace shascope {

std::string TorsionGroup::structure() const {
  if (n2 == 1) return "trivial";
  if (n1 == 1) return "Z/" + std::to_string(n2) + "Z";
  return "Z/" + std::to_string(n1) + "Z x Z/" + std::to_string(n2) + "Z";
}

bool q_on_curve(const ShortModel& m, const QPoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + m.A * P.x + m.B;
}

QPoint q_add(const ShortModel& m, const QPoint& P, const QPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  BigRat lam;
  if (P.x == Q.x) {
    if (P.y + Q.y == 0) return QPoint::at_infinity();
    lam = (3 * P.x * P.x + m.A) / (2 * P.y);
  } else {
    lam = (Q.y - P.y) / (Q.x - P.x);
  }
  BigRat x3 = lam * lam - P.x - Q.x;
  BigRat y3 = lam * (P.x - x3) - P.y;
  return QPoint::affine(x3, y3);
}

namespace {

BigInt cubic_at(const BigInt& a, const BigInt& c, const BigInt& x) { return BigInt(x * x * x + a * x + c); }

// Integer root of a cubic that is monotone on [lo, hi], if any.
void root_in(const BigInt& a, const BigInt& c, BigInt lo, BigInt hi, bool increasing, std::vector<BigInt>& out) {
  if (lo > hi) return;
  auto sign_ok = [&](const BigInt& x) {
    BigInt v = cubic_at(a, c, x);
    return increasing ? v >= 0 : v <= 0;
  };
  if (!sign_ok(hi)) return;
  while (lo < hi) {
    BigInt mid = lo + (hi - lo) / 2;
    if (sign_ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  if (cubic_at(a, c, lo) == 0) out.push_back(lo);
}

}  // namespace

std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& a, const BigInt& c) {
  BigInt R = 1 + std::max(abs(a), abs(c));
  std::vector<BigInt> out;
  if (a >= 0) {
    root_in(a, c, -R, R, true, out);
  } else {
    // Critical points at +-sqrt(-a/3); k is the least integer with 3k^2 >= -a.
    BigInt k = isqrt(BigInt(-a / 3));
    while (3 * k * k < -a) ++k;
    root_in(a, c, -R, BigInt(-k), true, out);
    root_in(a, c, BigInt(-(k - 1)), BigInt(k - 1), false, out);
    root_in(a, c, k, R, true, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<BigInt, BigInt>> torsion_candidates(const ShortModel& m, const FactorBudget& budget) {
  BigInt dp = m.disc_prime();
  if (dp == 0) throw SingularCurve(BigInt(-48 * m.A));
  Factorization f = factorize(dp, budget);
  // Enumerate d > 0 with d^2 | disc'.
  std::vector<BigInt> ds{1};
  for (const auto& pp : f.factors) {
    std::size_t base = ds.size();
    BigInt pw = 1;
    for (unsigned e = 1; 2 * e <= pp.exponent; ++e) {
      pw *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& x : integer_roots_depressed_cubic(m.A, m.B)) out.emplace_back(x, 0);
  for (const auto& d : ds) {
    BigInt d2 = d * d;
    for (const auto& x : integer_roots_depressed_cubic(m.A, BigInt(m.B - d2))) {
      out.emplace_back(x, -d);
      out.emplace_back(x, d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool mazur_admissible(unsigned n1, unsigned n2) {
  if (n1 == 1) return (n2 >= 1 && n2 <= 10) || n2 == 12;
  if (n1 == 2) return n2 == 2 || n2 == 4 || n2 == 6 || n2 == 8;
  return false;
}

namespace {

bool integral(const QPoint& P) { return P.x.get_den() == 1 && P.y.get_den() == 1; }

// Order in [1, 16] of an integral point, or 0 when it has infinite order.
unsigned torsion_order(const ShortModel& m, DivisionTable<BigInt>& t, const BigInt& x, const BigInt& y) {
  if (y == 0) return 2;
  for (std::size_t n = 3; n <= 12; ++n)
    if (torsion_test(t, x, y, n)) return static_cast<unsigned>(n);
  QPoint P = QPoint::affine(BigRat(x), BigRat(y));
  QPoint R = P;
  for (unsigned n = 2; n <= 16; ++n) {
    R = q_add(m, R, P);
    if (R.infinity) {
      if (n <= 12) throw InvariantViolation("division polynomial test missed a torsion point");
      return n;
    }
    if (!integral(R)) return 0;
  }
  return 0;
}

}  // namespace

TorsionGroup rational_torsion(const ShortModel& m, const FactorBudget& budget) {
  BigInt dp = m.disc_prime();
  if (dp == 0) throw SingularCurve(BigInt(-48 * m.A));
  DivisionTable<BigInt> table(m.A, m.B);
  TorsionGroup g;
  for (const auto& [x, y] : torsion_candidates(m, budget)) {
    unsigned o = torsion_order(m, table, x, y);
    if (!o) continue;
    if (y != 0 && !mpz_divisible_p(dp.get_mpz_t(), BigInt(y * y).get_mpz_t()))
      throw InvariantViolation("torsion point violates y^2 | disc'");
    g.points.push_back(TorsionPoint{x, y, o});
  }
  // Closure under the group law.
  std::vector<QPoint> all{QPoint::at_infinity()};
  for (const auto& tp : g.points) all.push_back(QPoint::affine(BigRat(tp.x), BigRat(tp.y)));
  for (const auto& P : all)
    for (const auto& Q : all) {
      QPoint S = q_add(m, P, Q);
      if (std::find(all.begin(), all.end(), S) == all.end())
        throw InvariantViolation("torsion set not closed under addition");
    }
  unsigned N = static_cast<unsigned>(all.size());
  unsigned two = 0, maxo = 1;
  for (const auto& tp : g.points) {
    if (tp.order == 2) ++two;
    maxo = std::max(maxo, tp.order);
  }
  if (N > 16) throw InvariantViolation("torsion order exceeds 16");
  if (two == 3) {
    g.n1 = 2;
    g.n2 = N / 2;
  } else {
    g.n1 = 1;
    g.n2 = N;
  }
  if (maxo != g.n2) throw InvariantViolation("torsion exponent does not match the inferred structure");
  if (!mazur_admissible(g.n1, g.n2)) throw InvariantViolation("torsion structure not on Mazur's list");
  return g;
}

bool torsion_injection_check(const ShortModel& m, std::uint64_t p, std::uint64_t mult) {
  if (mult == 0 || std::gcd(mult, p) != 1) throw DomainError("m must be coprime to p");
  FpCurve c = reduce_curve(m, p);  // throws on bad reduction
  // Scale factor relating the given model to the p-minimal one.
  BigInt P = static_cast<unsigned long>(p), u = 1;
  {
    BigInt A = m.A, B = m.B, p4 = P * P * P * P, p6 = p4 * P * P;
    while (mpz_divisible_p(A.get_mpz_t(), p4.get_mpz_t()) && mpz_divisible_p(B.get_mpz_t(), p6.get_mpz_t())) {
      A /= p4;
      B /= p6;
      u *= P;
    }
  }
  TorsionGroup g = rational_torsion(m);
  std::vector<FpPoint> images{FpPoint::at_infinity()};
  for (const auto& tp : g.points) {
    if (mult % tp.order) continue;
    BigRat x = make_rat(tp.x, BigInt(u * u)), y = make_rat(tp.y, BigInt(u * u * u));
    if (mpz_divisible_p(x.get_den_mpz_t(), P.get_mpz_t()) || mpz_divisible_p(y.get_den_mpz_t(), P.get_mpz_t()))
      return false;
    auto red = [&](const BigRat& v) {
      Fp num = Fp::from_big(BigInt(v.get_num()), p), den = Fp::from_big(BigInt(v.get_den()), p);
      return (num * inverse(den)).v;
    };
    FpPoint img = FpPoint::affine(red(x), red(y));
    if (!on_curve(c, img)) throw InvariantViolation("reduced torsion point is off the reduced curve");
    if (point_order(c, img) != tp.order) return false;
    if (std::find(images.begin(), images.end(), img) != images.end()) return false;
    images.push_back(img);
  }
  return true;
}

std::uint64_t reduction_torsion_bound(const ShortModel& m, unsigned count, std::uint64_t limit) {
  std::uint64_t g = 0;
  unsigned used = 0;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (p < 5) continue;
    if (reduction_report(m, BigInt(static_cast<unsigned long>(p))).kind != ReductionKind::Good) continue;
    g = std::gcd(g, group_order(reduce_curve(m, p)));
    if (++used == count) break;
  }
  if (used < count) throw DomainError("not enough good primes below the limit");
  return g;
}

}  // namespace shascope
