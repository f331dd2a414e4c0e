#include <gtest/gtest.h>

#include <set>

#include "shascope/ffcurve.hpp"

using namespace shascope;

namespace {

const ShortModel kEx3Min{-5316979, BigInt(-4724275762L)};

// Independent chord-tangent law with Fermat inverses.
struct Naive {
  std::uint64_t p, A;
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  FpPoint add(const FpPoint& P, const FpPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::uint64_t lam;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p == 0) return FpPoint::at_infinity();
      lam = (3 * P.x % p * P.x + A) % p * inv(2 * P.y) % p;
    } else {
      lam = (Q.y + p - P.y) % p * inv((Q.x + p - P.x) % p) % p;
    }
    std::uint64_t x = (lam * lam % p + 2 * p - P.x - Q.x) % p;
    std::uint64_t y = (lam * ((P.x + p - x) % p) % p + p - P.y) % p;
    return FpPoint::affine(x, y);
  }
  std::uint64_t order(const FpPoint& P) const {
    std::uint64_t k = 1;
    for (FpPoint Q = P; !Q.infinity; Q = add(Q, P)) ++k;
    return k;
  }
};

std::vector<FpPoint> brute_points(const FpCurve& c) {
  std::vector<FpPoint> out{FpPoint::at_infinity()};
  for (std::uint64_t x = 0; x < c.p; ++x)
    for (std::uint64_t y = 0; y < c.p; ++y)
      if (y * y % c.p == (x * x % c.p * x + c.A * x + c.B) % c.p) out.push_back(FpPoint::affine(x, y));
  return out;
}

}  // namespace

TEST(FfCurve, ReduceExample) {
  FpCurve c = reduce_curve(kEx3Min, 7);
  EXPECT_EQ(c, (FpCurve{7, 4, 4}));
  EXPECT_THROW(reduce_curve(kEx3Min, 23), BadReduction);
  try {
    reduce_curve(kEx3Min, 23);
  } catch (const BadReduction& e) {
    EXPECT_EQ(e.report().kind, ReductionKind::Additive);
  }
  EXPECT_EQ(reduce_curve(ShortModel{625, 31250}, 5), (FpCurve{5, 1, 2}));
  EXPECT_EQ(reduce_curve(ShortModel{625, 15626}, 5), (FpCurve{5, 0, 1}));
  EXPECT_THROW(make_fp_curve(9, 1, 1), DomainError);
  EXPECT_THROW(make_fp_curve(3, 1, 1), DomainError);
}

TEST(FfCurve, ExampleGroup) {
  FpCurve c{7, 4, 4};
  std::vector<FpPoint> pts = enumerate_points(c);
  std::vector<FpPoint> expect = {FpPoint::at_infinity(), FpPoint::affine(0, 2), FpPoint::affine(0, 5),
                                 FpPoint::affine(1, 3),  FpPoint::affine(1, 4), FpPoint::affine(3, 1),
                                 FpPoint::affine(3, 6),  FpPoint::affine(4, 0), FpPoint::affine(5, 3),
                                 FpPoint::affine(5, 4)};
  EXPECT_EQ(pts, expect);
  EXPECT_EQ(group_order(c), 10u);
  EXPECT_TRUE(add(c, FpPoint::affine(1, 3), FpPoint::affine(1, 4)).infinity);
  EXPECT_EQ(point_order(c, FpPoint::affine(1, 3)), 5u);
  EXPECT_EQ(point_order(c, FpPoint::affine(3, 1)), 10u);
  EXPECT_FALSE(is_supersingular(c));

  EllPrimary five = ell_primary(c, 5);
  EXPECT_TRUE(five.cyclic);
  EXPECT_EQ(five.size, 5u);
  ASSERT_EQ(five.points_by_order.size(), 2u);
  EXPECT_EQ(five.points_by_order[1], (std::vector<FpPoint>{FpPoint::affine(1, 3), FpPoint::affine(1, 4),
                                                           FpPoint::affine(5, 3), FpPoint::affine(5, 4)}));
  EllPrimary three = ell_primary(c, 3);
  EXPECT_EQ(three.size, 1u);
  EllPrimary two = ell_primary(c, 2);
  EXPECT_EQ(two.size, 2u);
  EXPECT_TRUE(two.cyclic);
  ASSERT_EQ(two.generators.size(), 1u);
  EXPECT_EQ(two.generators[0], FpPoint::affine(4, 0));
}

TEST(FfCurve, SmallCounts) {
  EXPECT_EQ(group_order(make_fp_curve(5, 0, 1)), 6u);
  EXPECT_EQ(group_order(make_fp_curve(5, -1, 0)), 8u);
  EXPECT_TRUE(is_supersingular(make_fp_curve(5, 0, 1)));
  EXPECT_TRUE(is_supersingular(make_fp_curve(7, 1, 0)));
  EXPECT_EQ(group_order(reduce_curve(kEx3Min, 11)), 8u);
}

TEST(FfCurve, CeilingIsEnforced) { EXPECT_THROW(group_order(make_fp_curve(1000003, 1, 1)), BudgetError); }

TEST(FfCurve, AgreesWithBruteForceUpTo60) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u}) {
    for (std::uint64_t A = 0; A < p; A += 3) {
      for (std::uint64_t B = 0; B < p; B += 2) {
        if ((4 * A * A % p * A + 27 * B * B) % p == 0) continue;
        FpCurve c{p, A, B};
        Naive nv{p, A};
        auto brute = brute_points(c);
        std::set<FpPoint> bs(brute.begin(), brute.end());
        auto pts = enumerate_points(c);
        ASSERT_EQ(std::set<FpPoint>(pts.begin(), pts.end()), bs);
        std::uint64_t maxord = 0;
        for (const auto& P : brute) {
          EXPECT_EQ(point_order(c, P), nv.order(P));
          maxord = std::max(maxord, nv.order(P));
          for (const auto& Q : {brute[brute.size() / 2], brute.back()}) EXPECT_EQ(add(c, P, Q), nv.add(P, Q));
        }
        GroupStructure g = group_structure(c);
        EXPECT_EQ(g.order, brute.size());
        EXPECT_EQ(g.n2, maxord);
        EXPECT_EQ(g.n1 * g.n2, brute.size());
        EXPECT_EQ(multiply(c, brute.back(), BigInt(static_cast<unsigned long>(g.order))), FpPoint::at_infinity());
      }
    }
  }
}
