#include <gtest/gtest.h>

#include "fixtures/oracle_fixtures.hpp"
#include "shascope/croots.hpp"
#include "shascope/divpoly.hpp"
#include "shascope/numfield.hpp"

using namespace shascope;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<BigRat> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

}  // namespace

TEST(NumField, Traces) {
  QuotRing r(qp({-2, 0, 1}));
  EXPECT_EQ(trace_in_ring(r, qp({0, 1})), 0);
  EXPECT_EQ(trace_in_ring(r, qp({0, 0, 1})), 4);
  DivisionTable<BigInt> t(BigInt(0), BigInt(1));
  QuotRing f3(to_rational(t.f(3)));
  EXPECT_EQ(trace_in_ring(f3, qp({0, 1})), 0);
  EXPECT_THROW(QuotRing(qp({1, -2, 1})), DomainError);
}

TEST(NumField, TraceMatchesCompanionPowerSums) {
  // Roots 1, 2, 3: sum of r^5 = 1 + 32 + 243.
  QuotRing r(qp({-6, 11, -6, 1}));
  EXPECT_EQ(trace_in_ring(r, qp({0, 0, 0, 0, 0, 1})), 276);
  EXPECT_EQ(trace_in_ring(r, invert_mod(r, qp({0, 1}))), make_rat(11, 6));
}

TEST(NumField, Inverses) {
  QuotRing r(qp({1, 0, 1}));
  EXPECT_EQ(invert_mod(r, qp({0, 1})), qp({0, -1}));
  DivisionTable<BigInt> t(BigInt(4), BigInt(4));
  QuotRing g5(to_rational(quotient_g(t, 5, 1)));
  QPoly psi = qp({4, 4, 0, 1});
  QPoly inv = invert_mod(g5, psi);
  EXPECT_EQ(g5.mul(inv, psi), qp({1}));
  EXPECT_THROW(invert_mod(g5, g5.modulus()), NotInvertible);
  QuotRing c(qp({-2, 4, 0, -3, 1}));  // (X - 1)(X^3 - 2X^2 - 2X + 2)
  try {
    invert_mod(c, qp({-1, 0, 1}));
    FAIL();
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.common_factor(), qp({-1, 1}));
  }
}

TEST(NumField, VanishingSubleadingTrace) {
  EXPECT_TRUE(cor6_check(ShortModel{4, 4}, 5, 1));
  EXPECT_TRUE(cor6_check(ShortModel{17, -3}, 3, 1));
  EXPECT_TRUE(cor6_check(ShortModel{1, 1}, 5, 2));
  EXPECT_TRUE(cor7_check(ShortModel{1, 1}, 3, make_rat(2, 7)));
  EXPECT_TRUE(cor7_check(ShortModel{1, 1}, 5, 0));
  EXPECT_TRUE(cor7_check(ShortModel{1, 1}, 7, 2));
  EXPECT_TRUE(cor7_check_symbolic(ShortModel{-1, 1}, 3));
}

TEST(NumField, InverseCubicTraceMatchesSympy) {
  for (const auto& c : fixtures::kInvCubicTrace) {
    AlphaTraceResult r = alpha_trace_direct(ShortModel{c.A, c.B}, c.ell, 1);
    EXPECT_EQ(r.root_sum, BigRat(c.value) * BigRat(BigInt(c.ell) * c.ell * c.ell * ShortModel{c.A, c.B}.disc_prime()));
  }
}

TEST(NumField, AlphaTraceAgreesWithComplexRoots) {
  ShortModel m{4, 4};
  AlphaTraceResult r = alpha_trace_direct(m, 5, 1);
  DivisionTable<BigInt> t(m.A, m.B);
  auto roots = isolate_roots(to_rational(quotient_g(t, 5, 1)));
  ASSERT_EQ(roots.size(), 12u);
  Complex sum{Real(0), Real(0)};
  Real scale = to_real(BigRat(125 * m.disc_prime()));
  for (const auto& z : roots) {
    Complex psi = z.center * z.center * z.center + Complex{Real(4), Real(0)} * z.center + Complex{Real(4), Real(0)};
    sum = sum + Complex{scale, Real(0)} / psi;
  }
  Real exact = to_real(r.root_sum);
  EXPECT_LT(abs(sum - Complex{exact, Real(0)}), Real("1e-30"));
}

TEST(NumField, StepEightMatchesDirectLevelTwo) {
  for (const ShortModel& m : {ShortModel{1, 1}, ShortModel{4, 4}, ShortModel{-1, 1}})
    EXPECT_EQ(alpha_trace_step8(m, 5), alpha_trace_direct(m, 5, 2).S);
  EXPECT_THROW(alpha_trace_step8(ShortModel{-3, 2}, 5), DomainError);
}

TEST(NumField, PartialFractionResidues) {
  auto a = cubic_residues_rational(qp({0, -1, 0, 1}));
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], make_rat(1, 2));
  EXPECT_EQ(a[1], -1);
  EXPECT_EQ(a[2], make_rat(1, 2));
  EXPECT_EQ(a[0] + a[1] + a[2], 0);
}

TEST(NumField, FiniteBoundConstants) {
  ShortModel m{1, 1};
  EXPECT_EQ(bound_constants(m, 5, 2).exact, 32);
  EXPECT_EQ(bound_constants(m, 5, 7).exact, 1);
  EXPECT_EQ(bound_constants(m, 5, 3).exact, 3);
  EXPECT_TRUE(alpha_trace_direct(m, 5, 2).finite_bounds_hold());
}

TEST(NumField, RootIsolationCertifiesSimpleRoots) {
  auto roots = isolate_roots(qp({-2, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& z : roots) {
    EXPECT_LT(abs(abs(z.center) - sqrt(Real(2))), Real("1e-60"));
    EXPECT_LT(z.radius, Real("1e-60"));
  }
}
