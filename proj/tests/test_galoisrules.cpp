#include <gtest/gtest.h>

#include <algorithm>

#include "shascope/galoisrules.hpp"

using namespace shascope;

namespace {

const ShortModel kEx3Min{-5316979, BigInt(-4724275762L)};
const LongModel kEx3Long{1, -1, 0, -332311, -73733731};
const LongModel kEx2Long{0, 1692602, 0, BigInt(-530052723915L), 0};
const LongModel k11a1{0, -1, 1, -10, -20};

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

TEST(GaloisRules, SmallExceptional) {
  for (std::uint64_t ell : primes_up_to(1000)) EXPECT_EQ(small_exceptional(ell), 12 % (ell - 1) == 0) << ell;
  EXPECT_TRUE(small_exceptional(13));
  EXPECT_FALSE(small_exceptional(11));
  EXPECT_FALSE(small_exceptional(41));
}

TEST(GaloisRules, PhiOrders) {
  EXPECT_EQ(phi_order_candidates(BigInt(23), 10).orders, (std::set<unsigned>{6}));
  EXPECT_EQ(phi_order_candidates(BigInt(2), 8).orders, (std::set<unsigned>{3, 6, 24}));
  EXPECT_FALSE(phi_order_candidates(BigInt(2), 8).extrapolated);
  EXPECT_EQ(phi_order_candidates(BigInt(5), 6).orders, (std::set<unsigned>{2}));
  EXPECT_TRUE(phi_order_candidates(BigInt(3), 4).unsupported);
}

TEST(GaloisRules, TateRule) {
  CurveData ex2 = analyze(kEx2Long);
  EXPECT_TRUE(tate_order_rule(ex2.reports, 41));
  CurveData ex3 = analyze(kEx3Long);
  EXPECT_FALSE(tate_order_rule(ex3.reports, 7));
  EXPECT_TRUE(tate_order_rule(ex3.reports, 11));
  EXPECT_FALSE(tate_order_rule(analyze(ShortModel{0, 1}).reports, 11));
}

TEST(GaloisRules, BorelWitnesses) {
  auto w3 = borel_witness(analyze(kEx3Min).reports);
  ASSERT_TRUE(w3.has_value());
  EXPECT_EQ(w3->p, 23);
  EXPECT_EQ(w3->q, 3u);
  auto w2 = borel_witness(analyze(kEx2Long).reports);
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ(w2->p, 2);
  EXPECT_EQ(w2->q, 3u);
  EXPECT_FALSE(borel_excluded(analyze(k11a1).reports));
}

TEST(GaloisRules, SerreBoundsAreExactFloors) {
  EXPECT_EQ(serre_bound_for_prime(BigInt(7)), 31210);
  EXPECT_EQ(serre_bound_for_prime(BigInt(2)), 1153);
  EXPECT_EQ(serre_bound_for_prime(BigInt(5)), 12026);  // 6016 + 2688 sqrt 5 = 12026.55...
  for (long p : {2L, 3L, 5L, 7L, 11L, 101L, 1009L}) {
    // r <= (sqrt p + 1)^8 < r + 1  <=>  (r^(1/8) - 1)^2 <= p < ((r+1)^(1/8) - 1)^2, checked with exact
    // integer arithmetic by expanding (sqrt p + 1)^8 = X + Y sqrt p.
    BigInt r = serre_bound_for_prime(BigInt(p));
    BigInt X = 0, Y = 0;
    const long binom[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    for (int k = 0; k <= 8; ++k) {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k / 2));
      if (k % 2 == 0) X += binom[k] * pk;
      else Y += binom[k] * pk;
    }
    // r - X <= Y sqrt p < r + 1 - X, with Y sqrt p irrational for prime p.
    BigInt lo = r - X, hi = r + 1 - X;
    EXPECT_TRUE(lo <= 0 || lo * lo < Y * Y * p) << p;
    EXPECT_TRUE(hi > 0 && hi * hi > Y * Y * p) << p;
  }
}

TEST(GaloisRules, Semistable) {
  EXPECT_FALSE(semistable_rule(analyze(kEx2Long).reports, 41));
  EXPECT_TRUE(semistable_rule(analyze(k11a1).reports, 11));
  EXPECT_FALSE(semistable_rule(analyze(k11a1).reports, 7));
}

TEST(GaloisRules, Verdicts) {
  CurveData ex2 = analyze(kEx2Long);
  ImageVerdict v41 = image_verdict(ex2, 41);
  EXPECT_EQ(v41.verdict, Verdict::SurjectiveProven);
  EXPECT_EQ(v41.chain, "b");
  CurveData ex3 = analyze(kEx3Long);
  EXPECT_EQ(image_verdict(ex3, 7).verdict, Verdict::Unknown);
  EXPECT_FALSE(image_verdict(ex3, 7).reasons.empty());
  ImageVerdict v11 = image_verdict(ex3, 11);
  EXPECT_EQ(v11.verdict, Verdict::SurjectiveProven);
  EXPECT_EQ(v11.chain, "b");
}

TEST(GaloisRules, ExceptionalSets) {
  Theorem5Report r2 = theorem5_report(analyze(kEx2Long));
  EXPECT_EQ(r2.exceptional, ints({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 8420798017LL}));
  EXPECT_EQ(r2.smallest_applicable, 41);
  EXPECT_TRUE(r2.tail_certified);
  EXPECT_FALSE(r2.incomplete);

  Theorem5Report r3 = theorem5_report(kEx3Min);
  EXPECT_EQ(r3.exceptional, ints({2, 3, 5, 7, 13, 23}));
  std::vector<std::uint64_t> unknown;
  for (const auto& v : r3.table)
    if (v.ell <= 100 && v.verdict == Verdict::Unknown) unknown.push_back(v.ell);
  EXPECT_EQ(unknown, (std::vector<std::uint64_t>{2, 3, 7}));
  EXPECT_THROW(theorem5_report(ShortModel{0, 0}), DomainError);
}

TEST(GaloisRules, MoreRulesNeverEnlargeTheSet) {
  RuleSet no_b;
  no_b.tate_borel = false;
  RuleSet with_mazur;
  with_mazur.mazur_list = true;
  for (const CurveData& c : {analyze(kEx2Long), analyze(kEx3Long), analyze(k11a1)}) {
    auto full = theorem5_report(c, 2000).exceptional;
    auto reduced = theorem5_report(c, 2000, no_b).exceptional;
    auto more = theorem5_report(c, 2000, with_mazur).exceptional;
    EXPECT_TRUE(std::includes(reduced.begin(), reduced.end(), full.begin(), full.end()));
    EXPECT_TRUE(std::includes(full.begin(), full.end(), more.begin(), more.end()));
  }
}

TEST(GaloisRules, BudgetExhaustionFlagsIncompleteReport) {
  // 4A^3 + 27B^2 = 27 (pq)^2 with two 13-digit primes; a tiny budget cannot split pq.
  FactorBudget tiny;
  tiny.rho_iterations = 5;
  tiny.trial_limit = 1000;
  ShortModel m{0, BigInt("1000000000039") * BigInt("1000000000061")};
  Theorem5Report r = theorem5_report(m, 200, RuleSet{}, tiny);
  EXPECT_TRUE(r.incomplete);
  EXPECT_NE(r.unfactored, 1);
  EXPECT_FALSE(r.tail_certified);
}
