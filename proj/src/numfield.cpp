#include "shascope/numfield.hpp"

#include <algorithm>

#include "shascope/croots.hpp"
#include "shascope/divpoly.hpp"

namespace shascope {

namespace {

// Integer associate of a rational polynomial (denominators cleared).
ExactPoly<BigInt> clear_denominators(const QPoly& g) {
  BigInt l = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return map_coeffs<BigInt>(g, [&](const BigRat& c) { return BigInt(c * l); });
}

}  // namespace

bool is_squarefree(const QPoly& g) {
  if (g.degree() <= 1) return true;
  ExactPoly<BigInt> h = clear_denominators(g);
  unsigned tried = 0;
  for (std::uint64_t q = 1000003; tried < 20; q += 2) {
    if (!is_prime(BigInt(static_cast<unsigned long>(q)))) continue;
    ++tried;
    if (mpz_divisible_ui_p(h.leading().get_mpz_t(), q)) continue;
    ExactPoly<Fp> hq = reduce_mod(h, q);
    if (poly_gcd(hq, hq.derivative()).degree() == 0) return true;
  }
  return poly_gcd(g, g.derivative()).degree() == 0;
}

QuotRing::QuotRing(const QPoly& g) {
  if (g.degree() < 1) throw DomainError("quotient ring modulus must have positive degree");
  if (!is_squarefree(g)) throw DomainError("quotient ring modulus is not squarefree");
  g_ = make_monic(g);
  const int d = g_.degree();
  // Newton's identities: p_k = -(k c_{d-k} + sum_{i=1}^{k-1} c_{d-i} p_{k-i}).
  const auto& c = g_.coeffs();
  ps_.assign(static_cast<std::size_t>(d), BigRat(0));
  ps_[0] = d;
  for (int k = 1; k < d; ++k) {
    BigRat s = k * c[d - k];
    for (int i = 1; i < k; ++i) s += c[d - i] * ps_[k - i];
    ps_[k] = -s;
  }
}

NotInvertible::NotInvertible(QPoly common)
    : DomainError("element not invertible: shares the factor " + common.str() + " with the modulus"),
      common_(std::move(common)) {}

BigRat trace_in_ring(const QuotRing& ring, const QPoly& elem) {
  QPoly e = elem.degree() >= ring.degree() ? ring.reduce(elem) : elem;
  BigRat t = 0;
  for (std::size_t k = 0; k < e.coeffs().size(); ++k) t += e.coeffs()[k] * ring.power_sums()[k];
  return t;
}

QPoly invert_mod(const QuotRing& ring, const QPoly& elem) {
  QPoly r0 = ring.modulus(), r1 = ring.reduce(elem);
  QPoly s0, s1 = QPoly::constant(BigRat(1));
  if (r1.is_zero()) throw NotInvertible(ring.modulus());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() > 0) throw NotInvertible(make_monic(r0));
  return ring.reduce(s0.divexact(r0.leading()));
}

bool cor6_check(const ShortModel& m, unsigned ell, unsigned n) {
  if (ell < 3) throw DomainError("cor6_check requires an odd prime");
  DivisionTable<BigInt> t(m.A, m.B);
  ExactPoly<BigInt> g = quotient_g(t, ell, n);
  return g.degree() >= 1 && is_zero(g.coeff(static_cast<std::size_t>(g.degree() - 1)));
}

bool cor7_check(const ShortModel& m, unsigned ell, const BigRat& lambda) {
  if (ell < 3) throw DomainError("cor7_check requires an odd prime");
  DivisionTable<BigRat> t{BigRat(m.A), BigRat(m.B)};
  QPoly phi = build_phi(t, ell, lambda);
  const int e = static_cast<int>(ell * ell);
  return phi.degree() == e && phi.leading() == 1 &&
         phi.coeff(static_cast<std::size_t>(e - 1)) == -BigRat(static_cast<unsigned long>(ell * ell)) * lambda;
}

bool cor7_check_symbolic(const ShortModel& m, unsigned ell) {
  if (ell < 3) throw DomainError("cor7_check requires an odd prime");
  DivisionTable<SymPoly> t{SymPoly(m.A), SymPoly(m.B)};
  SymPoly lambda = SymPoly::var(SymPoly::kL);
  ExactPoly<SymPoly> phi = build_phi(t, ell, lambda);
  const int e = static_cast<int>(ell * ell);
  return phi.degree() == e && phi.leading() == SymPoly(1) &&
         phi.coeff(static_cast<std::size_t>(e - 1)) == SymPoly(-static_cast<long>(ell * ell)) * lambda;
}

namespace {

void check_alpha_preconditions(const ShortModel& m, unsigned ell) {
  if (ell <= 3 || !is_prime(BigInt(ell))) throw DomainError("alpha traces require a prime l > 3");
  BigInt dp = m.disc_prime();
  if (dp == 0) throw SingularCurve(BigInt(-48 * m.A));
  if (mpz_divisible_ui_p(dp.get_mpz_t(), ell)) throw DomainError("alpha traces require l not dividing disc'");
}

BigInt ipow(unsigned long b, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

QPoly cubic_q(const ShortModel& m) {
  return QPoly(std::vector<BigRat>{BigRat(m.B), BigRat(m.A), BigRat(0), BigRat(1)});
}

}  // namespace

bool AlphaTraceResult::finite_bounds_hold() const {
  // |S|_q <= 1 <= C_{*,q} whenever q does not divide the denominator of S.
  BigInt den = S.get_den();
  BigInt M = ipow(ell - 1, 2) * (ell + 1);
  for (const auto& pp : factorize(den).factors) {
    if (pp.prime == ell) continue;
    long v = padic_val(S, pp.prime);
    if (S != 0 && -v > static_cast<long>(padic_val(M, pp.prime))) return false;
  }
  return true;
}

AlphaTraceResult alpha_trace_direct(const ShortModel& m, unsigned ell, unsigned n) {
  check_alpha_preconditions(m, ell);
  if (n < 1 || n > 2) throw DomainError("alpha_trace_direct supports n in {1, 2}");
  DivisionTable<BigInt> t(m.A, m.B);
  QPoly g = to_rational(quotient_g(t, ell, n));
  QuotRing ring(g);
  QPoly inv_psi;
  try {
    inv_psi = invert_mod(ring, cubic_q(m));
  } catch (const NotInvertible&) {
    throw InvariantViolation("a primitive torsion x-coordinate is a root of the cubic");
  }
  BigRat scale = BigRat(ipow(ell, 3) * m.disc_prime());
  AlphaTraceResult r;
  r.ell = ell;
  r.n = n;
  r.degree = static_cast<unsigned>(g.degree());
  r.root_sum = scale * trace_in_ring(ring, inv_psi);
  r.S = r.root_sum / r.degree;
  return r;
}

BigRat alpha_trace_step8(const ShortModel& m, unsigned ell) {
  check_alpha_preconditions(m, ell);
  QPoly psi = cubic_q(m);
  if (!is_squarefree(psi)) throw SingularCurve(BigInt(-48 * m.A));
  QuotRing R(psi);  // Q[E]/(psi): a root e runs over the 2-torsion x-coordinates
  DivisionTable<BigInt> t(m.A, m.B);
  const QPoly f = to_rational(t.f(ell));
  const QPoly E = QPoly::monomial(BigRat(1), 1);
  const QPoly F = R.reduce(f), DF = R.reduce(f.derivative());
  const QPoly FM = R.reduce(to_rational(t.f(ell - 1))), FP = R.reduce(to_rational(t.f(ell + 1)));
  const QPoly dpsi = psi.derivative();
  const BigRat d = BigRat(static_cast<long>(f.degree()));

  // Phi_l(X, x1) = (X - x1) f^2 - f_{l-1} f_{l+1} psi vanishes on the fibre over x1.
  // At X = e: Phi = (e - x1) F^2 and Phi' = per_root - 2 x1 Q.
  const QPoly per_root = R.reduce(F * F + R.reduce(QPoly::constant(BigRat(2)) * E * F * DF) - R.reduce(FM * FP) * dpsi);
  const QPoly Q = R.mul(F, DF);
  const QPoly Finv = invert_mod(R, F);
  // Sums over the roots x1 of f_l: 1/(e - x1) -> f'/f and x1/(e - x1) -> e f'/f - deg f.
  const QPoly sum_inv = R.mul(DF, Finv);
  const QPoly sum_x = R.mul(E, sum_inv) - QPoly::constant(d);
  // Sum over the fibres of 1/(r - e) = -Phi'(e)/Phi(e).
  QPoly W = -(R.mul(per_root, sum_inv) - R.mul(QPoly::constant(BigRat(2)) * Q, sum_x));
  W = R.mul(W, R.mul(Finv, Finv));
  // Partial fractions 1/psi(r) = sum_i A_i/(r - e_i), A_i = 1/psi'(e_i).
  const QPoly weighted = R.mul(W, invert_mod(R, dpsi));
  BigRat root_sum = BigRat(ipow(ell, 3) * m.disc_prime()) * trace_in_ring(R, weighted);
  BigInt deg2 = ipow(ell, 2) * (ipow(ell, 2) - 1) / 2;
  return root_sum / BigRat(deg2);
}

std::vector<BigRat> cubic_residues_rational(const QPoly& psi) {
  if (psi.degree() != 3) throw DomainError("expected a cubic");
  ExactPoly<BigInt> h = clear_denominators(make_monic(psi));
  // Rational roots of a monic integer cubic are integers dividing the constant term.
  BigInt lc = h.leading();
  if (lc != 1) throw DomainError("cubic must be monic with integer coefficients after scaling");
  std::vector<BigRat> roots;
  BigInt c0 = h.coeff(0);
  if (c0 == 0) roots.push_back(0);
  BigInt bound = 1 + std::max({abs(h.coeff(0)), abs(h.coeff(1)), abs(h.coeff(2))});
  for (BigInt x = -bound; x <= bound && roots.size() < 3; ++x) {
    if (x == 0) continue;
    if (c0 != 0 && !mpz_divisible_p(c0.get_mpz_t(), x.get_mpz_t())) continue;
    if (h.eval(x) == 0) roots.push_back(BigRat(x));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() != 3) throw DomainError("cubic does not split into distinct rational roots");
  QPoly dpsi = make_monic(psi).derivative();
  std::vector<BigRat> out;
  for (const auto& e : roots) out.push_back(inverse(dpsi.eval(e)));
  return out;
}

BoundConstant bound_constants(const ShortModel& m, unsigned ell, unsigned long q) {
  check_alpha_preconditions(m, ell);
  BoundConstant out;
  if (q != 0 && q != ell) {
    BigInt M = ipow(ell - 1, 2) * (ell + 1);
    if (!is_prime(BigInt(q))) throw DomainError("place must be a prime or infinity");
    out.exact = BigRat(ipow(q, padic_val(M, BigInt(q))));
    return out;
  }
  if (q == ell) {
    BigRat best = 0;
    for (unsigned n = 1; n <= 2; ++n) {
      BigRat S = alpha_trace_direct(m, ell, n).S;
      if (S == 0) continue;
      long v = padic_val(S, BigInt(ell));
      BigRat a = v >= 0 ? make_rat(1, ipow(ell, static_cast<unsigned>(v))) : BigRat(ipow(ell, static_cast<unsigned>(-v)));
      best = std::max(best, a);
    }
    out.exact = best;
    return out;
  }
  out.archimedean = true;
  const QPoly psi = cubic_q(m);
  auto psi_roots = isolate_roots(psi);
  DivisionTable<BigInt> t(m.A, m.B);
  Real disk = sqrt(2 * (to_real(BigRat(abs(m.A))) + to_real(BigRat(abs(m.B)))));
  std::optional<Real> delta;
  for (unsigned n = 1; n <= 2; ++n) {
    for (const auto& r : isolate_roots(to_rational(quotient_g(t, ell, n)))) {
      if (abs(r.center) + r.radius >= disk) continue;
      for (const auto& e : psi_roots) {
        Real dist = abs(r.center - e.center) - r.radius - e.radius;
        if (!delta || dist < *delta) delta = dist;
      }
    }
  }
  Real factor = 2;
  if (delta) {
    if (*delta <= 0) throw InvariantViolation("root distance not certified positive");
    Real inv3 = 1 / (*delta * *delta * *delta);
    if (inv3 > factor) factor = inv3;
    out.delta = to_decimal(*delta, 30);
  } else {
    out.delta = "inf";
  }
  Real value = to_real(BigRat(abs(m.disc_prime()) * ipow(ell, 3))) * factor;
  out.value = value.convert_to<double>();
  out.decimal = to_decimal(value, 30);
  return out;
}

}  // namespace shascope
