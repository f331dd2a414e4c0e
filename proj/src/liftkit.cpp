#include "shascope/liftkit.hpp"

#include <algorithm>
#include <set>

namespace shascope {

namespace {

unsigned val_capped(const BigInt& v, const BigInt& p, unsigned cap) {
  if (v == 0) return cap;
  return std::min(padic_val(v, p), cap);
}

}  // namespace

HenselCertificate hensel_certificate(const ExactPoly<BigInt>& f, const BigInt& p, const BigInt& target,
                                     unsigned max_level) {
  const ExactPoly<BigInt> df = f.derivative();
  if (!mpz_divisible_p(f.eval(target).get_mpz_t(), p.get_mpz_t())) throw DomainError("target is not a root mod p");
  const unsigned cap = 64;
  BigInt t0;
  mpz_fdiv_r(t0.get_mpz_t(), target.get_mpz_t(), p.get_mpz_t());
  std::vector<BigInt> level{t0};
  BigInt pk = p;
  for (unsigned k = 1; k <= max_level && !level.empty(); ++k) {
    for (const auto& a : level) {
      BigInt fa = f.eval(a), dfa = df.eval(a);
      if (dfa == 0) continue;
      unsigned vf = val_capped(fa, p, cap), vd = padic_val(dfa, p);
      if (vf > 2 * vd) {
        HenselCertificate c;
        c.residue = a;
        c.modulus = pk;
        c.v_f = vf;
        c.exact_root = fa == 0;
        c.v_df = vd;
        c.derivative_unit = vd == 0 && k == 1;
        return c;
      }
    }
    // Lift the roots mod p^k to roots mod p^(k+1).
    std::vector<BigInt> next;
    BigInt pk1 = pk * p;
    for (const auto& a : level)
      for (BigInt t = 0; t < p; ++t) {
        BigInt b = a + t * pk;
        if (mpz_divisible_p(f.eval(b).get_mpz_t(), pk1.get_mpz_t())) next.push_back(b);
      }
    if (next.size() > 4096) throw BudgetError("Hensel search exceeded its residue budget");
    level = std::move(next);
    pk = pk1;
  }
  throw InvariantViolation("no Hensel certificate found for a simple root near the target");
}

LiftPlan lift_plan(const ShortModel& model, std::uint64_t p, std::uint64_t ell) {
  BigInt P = static_cast<unsigned long>(p), L = static_cast<unsigned long>(ell);
  if (ell < 3 || !is_prime(L)) throw DomainError("l must be an odd prime");
  if (p < 5 || !is_prime(P)) throw DomainError("p must be a prime >= 5");
  if (p == ell) throw DomainError("precondition fails: p divides l");
  if ((ell - 1) % p == 0) throw DomainError("precondition fails: p divides l-1");
  if ((ell + 1) % p == 0) throw DomainError("precondition fails: p divides l+1");
  if (mpz_divisible_p(model.disc_prime().get_mpz_t(), P.get_mpz_t())) {
    ReductionReport r = reduction_report(model, P);
    if (r.kind != ReductionKind::Good) throw BadReduction(r);
  }

  LiftPlan plan;
  plan.p = p;
  plan.ell = ell;
  plan.model = model;
  {
    BigInt p4 = P * P * P * P, p6 = p4 * P * P;
    while (mpz_divisible_p(plan.model.A.get_mpz_t(), p4.get_mpz_t()) &&
           mpz_divisible_p(plan.model.B.get_mpz_t(), p6.get_mpz_t())) {
      plan.model.A /= p4;
      plan.model.B /= p6;
    }
  }
  if (mpz_divisible_p(plan.model.disc_prime().get_mpz_t(), P.get_mpz_t()))
    throw BadReduction(reduction_report(model, P));
  plan.reduced = reduce_curve(plan.model, p);
  EllPrimary part = ell_primary(plan.reduced, ell);
  plan.order = group_order(plan.reduced);
  plan.m = plan.order;
  while (plan.m % ell == 0) {
    plan.m /= ell;
    ++plan.n;
  }
  plan.ell_part_cyclic = part.cyclic;

  BigInt minv;
  BigInt mm = static_cast<unsigned long>(plan.m);
  if (!mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), L.get_mpz_t()))
    throw InvariantViolation("prime-to-l part is not invertible mod l");
  plan.bezout_a = minv;
  plan.bezout_b = exact_div(BigInt(1 - mm * minv), L);

  if (plan.n == 0) return plan;

  // Lexicographically smallest point of maximal l-power order.
  plan.generator = part.points_by_order.back().front();
  const FpPoint& G = plan.generator;
  plan.y_lift = BigInt(static_cast<unsigned long>(G.y));
  plan.y_squared = BigRat(*plan.y_lift * *plan.y_lift);
  plan.target_x = G.x;
  plan.cubic = ExactPoly<BigInt>(
      std::vector<BigInt>{BigInt(plan.model.B - *plan.y_lift * *plan.y_lift), plan.model.A, BigInt(0), BigInt(1)});
  if (mpz_divisible_p(plan.y_squared->get_num_mpz_t(), P.get_mpz_t()) ||
      mpz_divisible_p(plan.y_squared->get_den_mpz_t(), P.get_mpz_t()))
    throw InvariantViolation("y^2 is not a p-unit");
  plan.hensel = hensel_certificate(*plan.cubic, P, BigInt(static_cast<unsigned long>(G.x)));
  return plan;
}

bool replay_decomposition(const LiftPlan& plan) {
  const FpCurve& c = plan.reduced;
  std::set<FpPoint> span{FpPoint::at_infinity()};
  if (!plan.generator.infinity)
    for (FpPoint R = plan.generator; !R.infinity; R = add(c, R, plan.generator)) span.insert(R);
  auto pts = enumerate_points(c);
  std::set<FpPoint> ell_multiples;
  for (const auto& Q : pts) ell_multiples.insert(multiply(c, Q, BigInt(static_cast<unsigned long>(plan.ell))));
  if (plan.bezout_a * static_cast<unsigned long>(plan.m) + plan.bezout_b * static_cast<unsigned long>(plan.ell) != 1)
    return false;
  for (const auto& P0 : pts) {
    FpPoint mP = multiply(c, P0, BigInt(static_cast<unsigned long>(plan.m)));
    if (!span.count(mP)) return false;
    FpPoint rest = add(c, P0, negate(c, multiply(c, mP, plan.bezout_a)));
    if (!ell_multiples.count(rest)) return false;
  }
  return true;
}

std::vector<BigRat> admissible_set(unsigned C) {
  if (C < 1) throw DomainError("C must be positive");
  std::set<BigRat> vals;
  for (long a = -static_cast<long>(C); a <= static_cast<long>(C); ++a)
    for (long b = 1; b <= static_cast<long>(C); ++b)
      if (a != 0) vals.insert(make_rat(a, b));
  return {vals.begin(), vals.end()};
}

TowerDescriptor tower_descriptor(unsigned C, std::uint64_t ell) {
  if (ell <= 3 || !is_prime(BigInt(static_cast<unsigned long>(ell)))) throw DomainError("l must be a prime > 3");
  TowerDescriptor t;
  t.C = C;
  t.ell = ell;
  t.radicals.push_back("sqrt(-1)");
  for (std::uint64_t q : primes_up_to(C)) {
    if (q == ell) continue;
    t.radical_primes.push_back(q);
    t.radicals.push_back("sqrt(" + std::to_string(q) + ")");
  }
  t.radicals.push_back("sqrt(" + std::to_string(ell) + ")");
  t.cubic_layers = static_cast<unsigned>(admissible_set(C).size());
  // [K1:Q] = 2, each radical at most 2, each cubic splitting field at most 6 = 2*3.
  t.s_bound = 1 + static_cast<unsigned>(t.radical_primes.size()) + 1 + t.cubic_layers;
  t.t_bound = t.cubic_layers;
  return t;
}

}  // namespace shascope
