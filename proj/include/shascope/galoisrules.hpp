#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shascope/curves.hpp"

namespace shascope {

bool small_exceptional(std::uint64_t ell);

// Some prime of potentially multiplicative reduction has l not dividing ord_p(j).
bool tate_order_rule(const std::vector<ReductionReport>& reports, std::uint64_t ell);

struct PhiCandidates {
  std::set<unsigned> orders;
  bool unsupported = false;     // p = 3: no rule available
  bool extrapolated = false;    // p = 2 narrowing applied with ord(delta) != 8
};
PhiCandidates phi_order_candidates(const BigInt& p, unsigned ord_delta);

struct BorelWitness {
  BigInt p;
  unsigned q = 0;
  std::set<unsigned> candidates;
  bool extrapolated = false;
};
std::optional<BorelWitness> borel_witness(const std::vector<ReductionReport>& reports);
inline bool borel_excluded(const std::vector<ReductionReport>& reports) { return borel_witness(reports).has_value(); }

// floor((sqrt(p)+1)^8), exact.
BigInt serre_bound_for_prime(const BigInt& p);
// Uses the smallest prime absent from the bad-prime reports.
BigInt serre_bound(const std::vector<ReductionReport>& reports);
BigInt smallest_good_prime(const std::vector<ReductionReport>& reports);

bool semistable_rule(const std::vector<ReductionReport>& reports, std::uint64_t ell);

const std::vector<std::uint64_t>& mazur_isogeny_primes();

struct RuleSet {
  bool semistable = true;    // chain (a)
  bool tate_borel = true;    // chain (b)
  bool serre = true;         // chain (c)
  bool mazur_list = false;   // optional alternative chain
};

enum class Verdict { SurjectiveProven, Unknown };
std::string to_string(Verdict v);

struct RuleNote {
  std::string rule;
  bool fired = false;
  std::map<std::string, std::string> params;
};

struct ImageVerdict {
  std::uint64_t ell = 0;
  Verdict verdict = Verdict::Unknown;
  std::string chain;  // "a", "b", "c" or "mazur" when proven
  std::vector<RuleNote> reasons;
};

// Everything the rule engine needs about a curve.
struct CurveData {
  ShortModel minimal;
  BigInt u = 1;
  std::optional<LongModel> long_model;
  Invariants inv;            // of the minimized short model
  Factorization disc_prime;  // of 4A^3+27B^2 of the minimized model; may be partial
  std::vector<ReductionReport> reports;
};

CurveData analyze(const ShortModel& m, const FactorBudget& budget = {});
CurveData analyze(const LongModel& m, const FactorBudget& budget = {});

ImageVerdict image_verdict(const CurveData& c, std::uint64_t ell, const RuleSet& rules = {});

struct Theorem5Report {
  ShortModel curve;
  std::vector<BigInt> exceptional;  // sorted
  BigInt smallest_applicable;
  std::uint64_t scan_bound = 0;
  std::vector<ImageVerdict> table;  // every prime l <= scan_bound
  BigInt serre_bound;
  // Primes above the scan bound are covered: all exceed the Serre bound and satisfy the side conditions.
  bool tail_certified = false;
  bool incomplete = false;
  BigInt unfactored = 1;
  std::vector<std::string> notes;
};

constexpr std::uint64_t kDefaultScanBound = 10000;

Theorem5Report theorem5_report(const CurveData& c, std::uint64_t scan_bound = kDefaultScanBound,
                               const RuleSet& rules = {});
Theorem5Report theorem5_report(const ShortModel& m, std::uint64_t scan_bound = kDefaultScanBound,
                               const RuleSet& rules = {}, const FactorBudget& budget = {});

}  // namespace shascope
