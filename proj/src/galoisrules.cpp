#include "shascope/galoisrules.hpp"

#include <algorithm>
#include <numeric>

namespace shascope {

bool small_exceptional(std::uint64_t ell) { return ell >= 2 && 12 % (ell - 1) == 0 && is_prime(BigInt(ell)); }

bool tate_order_rule(const std::vector<ReductionReport>& reports, std::uint64_t ell) {
  if (ell % 2 == 0) return false;
  for (const auto& r : reports)
    if (r.potential == PotentialType::PotentiallyMultiplicative && r.ord_j % static_cast<long>(ell) != 0) return true;
  return false;
}

PhiCandidates phi_order_candidates(const BigInt& p, unsigned ord_delta) {
  PhiCandidates c;
  if (p == 3) {
    c.unsupported = true;
    return c;
  }
  if (p == 2) {
    if (ord_delta % 3 != 0) {
      c.orders = {3, 6, 24};
      c.extrapolated = ord_delta != 8;
    } else {
      c.orders = {2, 3, 4, 6, 8, 24};
    }
    return c;
  }
  c.orders = {12 / std::gcd(ord_delta, 12u)};
  return c;
}

std::optional<BorelWitness> borel_witness(const std::vector<ReductionReport>& reports) {
  for (const auto& r : reports) {
    if (r.potential != PotentialType::PotentiallyGood || r.kind == ReductionKind::Good) continue;
    if (r.p < 5 && !r.minimal_certified) continue;
    PhiCandidates c = phi_order_candidates(r.p, r.ord_delta);
    if (c.unsupported || c.orders.empty()) continue;
    unsigned g = 0;
    for (unsigned o : c.orders) g = std::gcd(g, o);
    BigInt pp1 = r.p * (r.p - 1);
    for (unsigned q = 2; q <= g; ++q) {
      if (g % q || !is_prime(BigInt(q))) continue;
      if (mpz_divisible_ui_p(pp1.get_mpz_t(), q)) continue;
      return BorelWitness{r.p, q, c.orders, c.extrapolated};
    }
  }
  return std::nullopt;
}

BigInt serre_bound_for_prime(const BigInt& p) {
  // (sqrt(p)+1)^2 = (p+1) + 2 sqrt(p); square twice in Z[sqrt(p)].
  BigInt u = p + 1, v = 2;
  for (int i = 0; i < 2; ++i) {
    BigInt nu = u * u + v * v * p, nv = 2 * u * v;
    u = nu;
    v = nv;
  }
  return u + isqrt(BigInt(v * v * p));
}

BigInt smallest_good_prime(const std::vector<ReductionReport>& reports) {
  for (BigInt p = 2;; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    bool bad = std::any_of(reports.begin(), reports.end(), [&](const ReductionReport& r) { return r.p == p; });
    if (!bad) return p;
  }
}

BigInt serre_bound(const std::vector<ReductionReport>& reports) {
  return serre_bound_for_prime(smallest_good_prime(reports));
}

bool semistable_rule(const std::vector<ReductionReport>& reports, std::uint64_t ell) {
  if (ell < 11) return false;
  return std::all_of(reports.begin(), reports.end(),
                     [](const ReductionReport& r) { return r.kind != ReductionKind::Additive; });
}

const std::vector<std::uint64_t>& mazur_isogeny_primes() {
  static const std::vector<std::uint64_t> v{2, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163};
  return v;
}

std::string to_string(Verdict v) { return v == Verdict::SurjectiveProven ? "surjectiveProven" : "unknown"; }

namespace {

std::vector<BigInt> bad_prime_set(const Factorization& dp) {
  std::vector<BigInt> out{2};
  for (const auto& pp : dp.factors)
    if (pp.prime != 2) out.push_back(pp.prime);
  return out;
}

}  // namespace

CurveData analyze(const ShortModel& m, const FactorBudget& budget) {
  CurveData c;
  Minimized mz = minimize_short(m);
  c.minimal = mz.model;
  c.u = mz.u;
  c.inv = invariants(c.minimal);
  c.disc_prime = factorize_partial(c.inv.delta_prime, budget);
  for (const auto& p : bad_prime_set(c.disc_prime)) c.reports.push_back(reduction_report(c.minimal, p));
  return c;
}

CurveData analyze(const LongModel& m, const FactorBudget& budget) {
  CurveData c = analyze(to_short(m), budget);
  c.long_model = m;
  std::vector<ReductionReport> merged;
  for (const auto& r : c.reports) {
    if (r.p < 5) {
      ReductionReport lr = reduction_report(m, r.p);
      if (lr.minimal_certified) {
        if (lr.kind != ReductionKind::Good) merged.push_back(lr);
        continue;
      }
    }
    merged.push_back(r);
  }
  c.reports = merged;
  return c;
}

ImageVerdict image_verdict(const CurveData& c, std::uint64_t ell, const RuleSet& rules) {
  ImageVerdict v;
  v.ell = ell;
  const auto& reps = c.reports;
  const bool complete = c.disc_prime.complete();

  RuleNote a{"semistable"};
  a.fired = rules.semistable && complete && semistable_rule(reps, ell);
  if (!rules.semistable) a.params["disabled"] = "true";
  if (!complete) a.params["blocked"] = "incomplete factorization";
  v.reasons.push_back(a);

  RuleNote tate{"tate_order"};
  tate.fired = tate_order_rule(reps, ell);
  for (const auto& r : reps)
    if (r.potential == PotentialType::PotentiallyMultiplicative && r.ord_j % static_cast<long>(ell) != 0) {
      tate.params["p0"] = r.p.get_str();
      tate.params["ord_j"] = std::to_string(r.ord_j);
      break;
    }
  v.reasons.push_back(tate);

  RuleNote borel{"borel_excluded"};
  auto w = borel_witness(reps);
  borel.fired = w.has_value();
  if (w) {
    borel.params["p"] = w->p.get_str();
    borel.params["q"] = std::to_string(w->q);
    std::string s;
    for (unsigned o : w->candidates) s += (s.empty() ? "" : ",") + std::to_string(o);
    borel.params["phi_candidates"] = s;
    if (w->extrapolated) borel.params["extrapolated"] = "true";
  }
  v.reasons.push_back(borel);

  RuleNote b{"chain_b"};
  b.fired = rules.tate_borel && ell >= 5 && tate.fired && borel.fired;
  if (!rules.tate_borel) b.params["disabled"] = "true";
  v.reasons.push_back(b);

  RuleNote cc{"chain_c"};
  BigInt sb = serre_bound(reps);
  bool divides = mpz_divisible_ui_p(c.inv.delta_prime.get_mpz_t(), ell) != 0;
  cc.fired = rules.serre && BigInt(ell) > sb && !divides && tate.fired;
  cc.params["serre_bound"] = sb.get_str();
  cc.params["smallest_good_prime"] = smallest_good_prime(reps).get_str();
  if (!rules.serre) cc.params["disabled"] = "true";
  v.reasons.push_back(cc);

  if (rules.mazur_list) {
    RuleNote mz{"mazur_list"};
    const auto& ml = mazur_isogeny_primes();
    mz.fired = ell >= 5 && tate.fired && std::find(ml.begin(), ml.end(), ell) == ml.end();
    v.reasons.push_back(mz);
    if (mz.fired && v.chain.empty()) v.chain = "mazur";
  }

  if (a.fired) v.chain = "a";
  else if (b.fired) v.chain = "b";
  else if (cc.fired) v.chain = "c";
  v.verdict = v.chain.empty() ? Verdict::Unknown : Verdict::SurjectiveProven;
  return v;
}

Theorem5Report theorem5_report(const CurveData& c, std::uint64_t scan_bound, const RuleSet& rules) {
  Theorem5Report rep;
  rep.curve = c.minimal;
  rep.scan_bound = scan_bound;
  rep.incomplete = !c.disc_prime.complete();
  rep.unfactored = c.disc_prime.unfactored;
  rep.serre_bound = serre_bound(c.reports);

  std::set<BigInt> P;
  for (std::uint64_t l : {2, 3, 5, 7, 13}) P.insert(BigInt(l));
  for (const auto& pp : c.disc_prime.factors) P.insert(pp.prime);
  for (std::uint64_t l : primes_up_to(scan_bound)) {
    ImageVerdict v = image_verdict(c, l, rules);
    if (v.verdict == Verdict::Unknown) P.insert(BigInt(l));
    rep.table.push_back(std::move(v));
  }
  rep.exceptional.assign(P.begin(), P.end());

  // Uniform coverage of primes above the scan bound.
  long min_ord = -1;
  for (const auto& r : c.reports)
    if (r.potential == PotentialType::PotentiallyMultiplicative) {
      long a = std::labs(r.ord_j);
      if (min_ord < 0 || a < min_ord) min_ord = a;
    }
  bool tate_tail = min_ord >= 0 && static_cast<std::uint64_t>(min_ord) <= scan_bound;
  bool semistable = rules.semistable && !rep.incomplete && semistable_rule(c.reports, 11);
  bool chain_b = rules.tate_borel && tate_tail && borel_excluded(c.reports);
  bool chain_c = rules.serre && tate_tail && rep.serre_bound <= scan_bound;
  rep.tail_certified = !rep.incomplete && (semistable || chain_b || chain_c);
  if (rep.tail_certified)
    rep.notes.push_back(std::string("primes above the scan bound are covered by chain ") +
                        (semistable ? "a" : chain_b ? "b" : "c") + " except divisors of disc'");
  else
    rep.notes.push_back("exceptional set is exhaustive only up to the scan bound");

  rep.smallest_applicable = 0;
  for (BigInt q = 2;; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
    if (P.count(q)) continue;
    if (q <= BigInt(scan_bound)) {
      rep.smallest_applicable = q;
      break;
    }
    if (mpz_divisible_p(c.inv.delta_prime.get_mpz_t(), q.get_mpz_t())) continue;
    if (image_verdict(c, q.get_ui(), rules).verdict == Verdict::SurjectiveProven) {
      rep.smallest_applicable = q;
      break;
    }
    if (q > BigInt(scan_bound) * 100) break;
  }

  for (const auto& r : c.reports) {
    if (r.p != 2 || r.potential != PotentialType::PotentiallyGood) continue;
    PhiCandidates pc = phi_order_candidates(r.p, r.ord_delta);
    if (pc.extrapolated)
      rep.notes.push_back("p=2 inertia-order narrowing extrapolated beyond ord_2(delta)=8 (ord_2(delta)=" +
                          std::to_string(r.ord_delta) + ")");
  }
  if (rep.incomplete)
    rep.notes.push_back("disc' only partially factored; unfactored cofactor " + rep.unfactored.get_str());
  return rep;
}

Theorem5Report theorem5_report(const ShortModel& m, std::uint64_t scan_bound, const RuleSet& rules,
                               const FactorBudget& budget) {
  return theorem5_report(analyze(m, budget), scan_bound, rules);
}

}  // namespace shascope
