#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shascope/curves.hpp"
#include "shascope/ring.hpp"

namespace shascope {

struct FpCurve {
  std::uint64_t p = 0, A = 0, B = 0;
  friend bool operator==(const FpCurve&, const FpCurve&) = default;
};

struct FpPoint {
  bool infinity = true;
  std::uint64_t x = 0, y = 0;

  static FpPoint at_infinity() { return {}; }
  static FpPoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }
  friend bool operator==(const FpPoint&, const FpPoint&) = default;
  // Infinity first, then lexicographic (x, y).
  friend bool operator<(const FpPoint& a, const FpPoint& b);
};

class BadReduction : public DomainError {
 public:
  explicit BadReduction(ReductionReport r);
  const ReductionReport& report() const { return report_; }

 private:
  ReductionReport report_;
};

constexpr std::uint64_t kDefaultCountCeiling = 1000000;

// Validated constructor; rejects p < 5, composite p and singular (A, B).
FpCurve make_fp_curve(std::uint64_t p, std::int64_t A, std::int64_t B);
FpCurve reduce_curve(const ShortModel& m, std::uint64_t p);

bool on_curve(const FpCurve& c, const FpPoint& P);
FpPoint negate(const FpCurve& c, const FpPoint& P);
FpPoint add(const FpCurve& c, const FpPoint& P, const FpPoint& Q);
FpPoint multiply(const FpCurve& c, const FpPoint& P, const BigInt& k);

std::uint64_t group_order(const FpCurve& c, std::uint64_t ceiling = kDefaultCountCeiling);
// All points, infinity first, then sorted by (x, y).
std::vector<FpPoint> enumerate_points(const FpCurve& c, std::uint64_t ceiling = kDefaultCountCeiling);
std::uint64_t point_order(const FpCurve& c, const FpPoint& P, std::uint64_t group_order);
std::uint64_t point_order(const FpCurve& c, const FpPoint& P);

struct GroupStructure {
  std::uint64_t order = 0;
  std::uint64_t n1 = 1, n2 = 1;  // E(F_p) = Z/n1 x Z/n2 with n1 | n2
  std::vector<FpPoint> generators;
};
GroupStructure group_structure(const FpCurve& c, std::uint64_t ceiling = kDefaultCountCeiling);

struct EllPrimary {
  std::uint64_t ell = 0;
  std::uint64_t size = 1;          // order of the l-Sylow subgroup
  std::uint64_t n1 = 1, n2 = 1;    // its invariant factors
  bool cyclic = true;
  std::vector<FpPoint> generators;
  // points_by_order[k] lists the points of exact order l^k, sorted.
  std::vector<std::vector<FpPoint>> points_by_order;
};
EllPrimary ell_primary(const FpCurve& c, std::uint64_t ell, std::uint64_t ceiling = kDefaultCountCeiling);

bool is_supersingular(const FpCurve& c, std::uint64_t ceiling = kDefaultCountCeiling);

}  // namespace shascope
