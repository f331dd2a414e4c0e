#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shascope/arith.hpp"

namespace shascope {

struct LongModel {
  BigInt a1, a2, a3, a4, a6;
  friend bool operator==(const LongModel&, const LongModel&) = default;
};

struct ShortModel {
  BigInt A, B;
  friend bool operator==(const ShortModel&, const ShortModel&) = default;
  // 4A^3 + 27B^2
  BigInt disc_prime() const;
  LongModel as_long() const { return LongModel{0, 0, 0, A, B}; }
};

struct Invariants {
  BigInt b2, b4, b6, b8, c4, c6, delta;
  // 4A^3+27B^2 of the short model obtained by to_short (A=-27c4, B=-54c6).
  BigInt delta_prime;
  BigRat j;
};

enum class SingularKind { Node, Cusp };

class SingularCurve : public DomainError {
 public:
  SingularCurve(BigInt c4);
  const BigInt& c4() const { return c4_; }
  SingularKind kind() const { return c4_ == 0 ? SingularKind::Cusp : SingularKind::Node; }

 private:
  BigInt c4_;
};

Invariants invariants(const LongModel& m);
Invariants invariants(const ShortModel& m);

ShortModel to_short(const LongModel& m);

struct Minimized {
  ShortModel model;
  BigInt u;
};
Minimized minimize_short(const ShortModel& m);

enum class ReductionKind { Good, Multiplicative, Additive };
enum class SplitType { Split, Nonsplit, Undetermined };
enum class PotentialType { PotentiallyGood, PotentiallyMultiplicative };

struct ReductionReport {
  BigInt p;
  ReductionKind kind = ReductionKind::Good;
  std::optional<SplitType> split;  // present only for multiplicative reduction
  PotentialType potential = PotentialType::PotentiallyGood;
  unsigned ord_delta = 0;
  unsigned ord_c4 = 0;  // meaningless when c4_zero
  bool c4_zero = false;
  long ord_j = 0;  // meaningless when j_zero
  bool j_zero = false;
  // v(delta) < 12 or v(c4) < 4 on the classified model: minimal at p.
  bool minimal_certified = false;
  std::string model_source;  // "short" or "long"
  std::optional<std::string> caveat;
};

std::string to_string(ReductionKind k);
std::string to_string(SplitType s);
std::string to_string(PotentialType p);

// Short-model classification; p >= 5 is p-minimized first.
ReductionReport reduction_report(const ShortModel& m, const BigInt& p);
// Classification on the given long model itself (no change of coordinates).
ReductionReport reduction_report(const LongModel& m, const BigInt& p);

std::vector<ReductionReport> bad_primes(const ShortModel& m, const FactorBudget& budget = {});

// Bad-prime reports for a curve given by a long model: primes >= 5 classified on the
// minimized short model, p in {2,3} on the long model when it is certified minimal there.
std::vector<ReductionReport> bad_primes(const LongModel& m, const FactorBudget& budget = {});

}  // namespace shascope
