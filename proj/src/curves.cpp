#include "shascope/curves.hpp"

#include "shascope/ring.hpp"

namespace shascope {

BigInt ShortModel::disc_prime() const { return BigInt(4 * A * A * A + 27 * B * B); }

SingularCurve::SingularCurve(BigInt c4)
    : DomainError(std::string("singular cubic (") + (c4 == 0 ? "cusp" : "node") + ", c4 = " + c4.get_str() + ")"),
      c4_(std::move(c4)) {}

namespace {

Invariants raw_invariants(const LongModel& m) {
  Invariants v;
  const BigInt &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.delta = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
  return v;
}

void finish(Invariants& v) {
  if (v.delta == 0) throw SingularCurve(v.c4);
  if (1728 * v.delta != v.c4 * v.c4 * v.c4 - v.c6 * v.c6)
    throw InvariantViolation("c4^3 - c6^2 != 1728 delta");
  v.j = make_rat(BigInt(v.c4 * v.c4 * v.c4), v.delta);
}

}  // namespace

Invariants invariants(const LongModel& m) {
  Invariants v = raw_invariants(m);
  finish(v);
  BigInt A = -27 * v.c4, B = -54 * v.c6;
  v.delta_prime = 4 * A * A * A + 27 * B * B;
  return v;
}

Invariants invariants(const ShortModel& m) {
  Invariants v = raw_invariants(m.as_long());
  finish(v);
  v.delta_prime = m.disc_prime();
  if (v.delta != -16 * v.delta_prime) throw InvariantViolation("short model delta != -16 delta'");
  return v;
}

ShortModel to_short(const LongModel& m) {
  Invariants v = invariants(m);
  return ShortModel{BigInt(-27 * v.c4), BigInt(-54 * v.c6)};
}

Minimized minimize_short(const ShortModel& m) {
  if (m.A == 0 && m.B == 0) throw SingularCurve(0);
  // u^4 | A and u^6 | B prime by prime, over primes dividing gcd(A, B).
  BigInt g;
  mpz_gcd(g.get_mpz_t(), m.A.get_mpz_t(), m.B.get_mpz_t());
  Factorization f = factorize(g);
  BigInt u = 1;
  for (const auto& pp : f.factors) {
    unsigned ea = m.A == 0 ? ~0u : padic_val(m.A, pp.prime);
    unsigned eb = m.B == 0 ? ~0u : padic_val(m.B, pp.prime);
    unsigned k = std::min(ea / 4, eb / 6);
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), k);
    u *= pk;
  }
  BigInt u4 = u * u * u * u, u6 = u4 * u * u;
  return Minimized{ShortModel{exact_div(m.A, u4), exact_div(m.B, u6)}, u};
}

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Multiplicative: return "multiplicative";
    case ReductionKind::Additive: return "additive";
  }
  return "";
}

std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Nonsplit: return "nonsplit";
    case SplitType::Undetermined: return "undetermined";
  }
  return "";
}

std::string to_string(PotentialType p) {
  return p == PotentialType::PotentiallyGood ? "potentiallyGood" : "potentiallyMultiplicative";
}

namespace {

const char* kShortCaveat =
    "classification from possibly non-minimal short model; potential type via ord_p(j) is authoritative";

bool is_qr(const BigInt& a, const BigInt& p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) return true;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == 1;
}

void classify(ReductionReport& r, const BigInt& delta, const BigInt& c4, const BigRat& j) {
  const BigInt& p = r.p;
  r.ord_delta = padic_val(delta, p);
  r.c4_zero = c4 == 0;
  r.ord_c4 = r.c4_zero ? 0 : padic_val(c4, p);
  r.j_zero = j == 0;
  r.ord_j = r.j_zero ? 0 : padic_val(j, p);
  if (r.ord_delta == 0) r.kind = ReductionKind::Good;
  else if (!r.c4_zero && r.ord_c4 == 0) r.kind = ReductionKind::Multiplicative;
  else r.kind = ReductionKind::Additive;
  r.potential = (r.j_zero || r.ord_j >= 0) ? PotentialType::PotentiallyGood : PotentialType::PotentiallyMultiplicative;
  r.minimal_certified = r.ord_delta < 12 || (!r.c4_zero && r.ord_c4 < 4);
}

}  // namespace

ReductionReport reduction_report(const ShortModel& model, const BigInt& p) {
  if (p < 2 || !is_prime(p)) throw DomainError("reduction_report requires a prime, got " + p.get_str());
  ShortModel m = model;
  if (p >= 5) {
    BigInt p4 = p * p * p * p, p6 = p4 * p * p;
    while (mpz_divisible_p(m.A.get_mpz_t(), p4.get_mpz_t()) && mpz_divisible_p(m.B.get_mpz_t(), p6.get_mpz_t())) {
      if (m.A == 0 && m.B == 0) throw SingularCurve(0);
      m.A /= p4;
      m.B /= p6;
    }
  }
  Invariants v = invariants(m);
  ReductionReport r;
  r.p = p;
  r.model_source = "short";
  classify(r, v.delta, v.c4, v.j);
  if (p < 5) {
    r.caveat = kShortCaveat;
    if (r.kind == ReductionKind::Multiplicative) r.split = SplitType::Undetermined;
    return r;
  }
  r.minimal_certified = true;
  if (r.kind == ReductionKind::Multiplicative) {
    // Node at x0 = -3B/(2A); tangent slopes are the square roots of 3*x0.
    BigInt inv2a;
    BigInt twoA = 2 * m.A;
    mpz_invert(inv2a.get_mpz_t(), twoA.get_mpz_t(), p.get_mpz_t());
    BigInt x0 = BigInt(-3 * m.B * inv2a) % p;
    bool split = is_qr(BigInt(3 * x0), p);
    if (split != is_qr(BigInt(-v.c6), p)) throw InvariantViolation("split test disagrees with -c6 criterion");
    r.split = split ? SplitType::Split : SplitType::Nonsplit;
  }
  return r;
}

ReductionReport reduction_report(const LongModel& m, const BigInt& p) {
  if (p < 2 || !is_prime(p)) throw DomainError("reduction_report requires a prime, got " + p.get_str());
  Invariants v = invariants(m);
  ReductionReport r;
  r.p = p;
  r.model_source = "long";
  classify(r, v.delta, v.c4, v.j);
  if (p < 5) {
    r.caveat = r.minimal_certified
                   ? "classification from the given long model, minimal at p since ord_p(delta) < 12 or ord_p(c4) < 4"
                   : "classification from possibly non-minimal long model; potential type via ord_p(j) is authoritative";
    if (r.kind == ReductionKind::Multiplicative) r.split = SplitType::Undetermined;
  } else if (r.kind == ReductionKind::Multiplicative) {
    r.split = is_qr(BigInt(-v.c6), p) ? SplitType::Split : SplitType::Nonsplit;
  }
  return r;
}

std::vector<ReductionReport> bad_primes(const ShortModel& model, const FactorBudget& budget) {
  ShortModel m = minimize_short(model).model;
  Invariants v = invariants(m);
  Factorization f = factorize(v.delta, budget);
  std::vector<ReductionReport> out;
  for (const auto& pp : f.factors) out.push_back(reduction_report(m, pp.prime));
  return out;
}

std::vector<ReductionReport> bad_primes(const LongModel& model, const FactorBudget& budget) {
  ShortModel m = minimize_short(to_short(model)).model;
  Invariants v = invariants(m);
  Factorization f = factorize(v.delta, budget);
  std::vector<ReductionReport> out;
  for (const auto& pp : f.factors) {
    if (pp.prime < 5) {
      ReductionReport lr = reduction_report(model, pp.prime);
      if (lr.minimal_certified) {
        if (lr.kind != ReductionKind::Good) out.push_back(lr);
        continue;
      }
    }
    out.push_back(reduction_report(m, pp.prime));
  }
  return out;
}

}  // namespace shascope
