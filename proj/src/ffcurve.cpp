#include "shascope/ffcurve.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace shascope {

bool operator<(const FpPoint& a, const FpPoint& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

BadReduction::BadReduction(ReductionReport r)
    : DomainError("bad reduction at p = " + r.p.get_str() + " (" + to_string(r.kind) + ")"), report_(std::move(r)) {}

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  if (nr == 0) throw InvariantViolation("inverse of zero mod p");
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t rhs(const FpCurve& c, std::uint64_t x) {
  std::uint64_t x2 = mulmod(x, x, c.p);
  return addm(addm(mulmod(x2, x, c.p), mulmod(c.A, x, c.p), c.p), c.B, c.p);
}

void check_ceiling(const FpCurve& c, std::uint64_t ceiling) {
  if (c.p > ceiling)
    throw BudgetError("desk-scale ceiling exceeded: p = " + std::to_string(c.p) + " > " + std::to_string(ceiling));
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FpCurve make_fp_curve(std::uint64_t p, std::int64_t A, std::int64_t B) {
  if (p < 5 || !is_prime(BigInt(static_cast<unsigned long>(p))))
    throw DomainError("F_p curves require a prime p >= 5");
  if (p >= (1ULL << 62)) throw DomainError("modulus too large");
  FpCurve c{p, Fp(A, p).v, Fp(B, p).v};
  std::uint64_t a3 = mulmod(mulmod(c.A, c.A, p), c.A, p);
  std::uint64_t d = addm(mulmod(4, a3, p), mulmod(27, mulmod(c.B, c.B, p), p), p);
  if (d == 0) throw DomainError("singular curve over F_p");
  return c;
}

FpCurve reduce_curve(const ShortModel& model, std::uint64_t p) {
  BigInt P = static_cast<unsigned long>(p);
  if (p < 5 || !is_prime(P)) throw DomainError("reduce_curve requires a prime p >= 5");
  ReductionReport r = reduction_report(model, P);
  if (r.kind != ReductionKind::Good) throw BadReduction(r);
  ShortModel m = model;
  BigInt p4 = P * P * P * P, p6 = p4 * P * P;
  while (mpz_divisible_p(m.A.get_mpz_t(), p4.get_mpz_t()) && mpz_divisible_p(m.B.get_mpz_t(), p6.get_mpz_t())) {
    m.A /= p4;
    m.B /= p6;
  }
  return FpCurve{p, Fp::from_big(m.A, p).v, Fp::from_big(m.B, p).v};
}

bool on_curve(const FpCurve& c, const FpPoint& P) {
  if (P.infinity) return true;
  if (P.x >= c.p || P.y >= c.p) return false;
  return mulmod(P.y, P.y, c.p) == rhs(c, P.x);
}

FpPoint negate(const FpCurve& c, const FpPoint& P) {
  if (P.infinity) return P;
  return FpPoint::affine(P.x, P.y ? c.p - P.y : 0);
}

FpPoint add(const FpCurve& c, const FpPoint& P, const FpPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const std::uint64_t p = c.p;
  std::uint64_t lam;
  if (P.x == Q.x) {
    if (addm(P.y, Q.y, p) == 0) return FpPoint::at_infinity();
    std::uint64_t num = addm(mulmod(3, mulmod(P.x, P.x, p), p), c.A, p);
    lam = mulmod(num, invm(addm(P.y, P.y, p), p), p);
  } else {
    lam = mulmod(subm(Q.y, P.y, p), invm(subm(Q.x, P.x, p), p), p);
  }
  std::uint64_t x3 = subm(subm(mulmod(lam, lam, p), P.x, p), Q.x, p);
  std::uint64_t y3 = subm(mulmod(lam, subm(P.x, x3, p), p), P.y, p);
  return FpPoint::affine(x3, y3);
}

namespace {
FpPoint multiply_u(const FpCurve& c, FpPoint P, std::uint64_t k) {
  FpPoint R;
  while (k) {
    if (k & 1) R = add(c, R, P);
    P = add(c, P, P);
    k >>= 1;
  }
  return R;
}
}  // namespace

FpPoint multiply(const FpCurve& c, const FpPoint& P, const BigInt& k) {
  BigInt kk = k;
  FpPoint base = P;
  if (kk < 0) {
    kk = -kk;
    base = negate(c, P);
  }
  FpPoint R, Q = base;
  std::size_t bits = mpz_sizeinbase(kk.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(kk.get_mpz_t(), i)) R = add(c, R, Q);
    Q = add(c, Q, Q);
  }
  return R;
}

std::uint64_t group_order(const FpCurve& c, std::uint64_t ceiling) {
  check_ceiling(c, ceiling);
  std::vector<char> is_sq(c.p, 0);
  for (std::uint64_t y = 1; y < c.p; ++y) is_sq[mulmod(y, y, c.p)] = 1;
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < c.p; ++x) {
    std::uint64_t r = rhs(c, x);
    n += r == 0 ? 1 : (is_sq[r] ? 2 : 0);
  }
  return n;
}

std::vector<FpPoint> enumerate_points(const FpCurve& c, std::uint64_t ceiling) {
  check_ceiling(c, ceiling);
  std::vector<std::uint64_t> root(c.p, 0);  // smallest square root of each residue, 0 if none
  std::vector<char> has(c.p, 0);
  for (std::uint64_t y = c.p - 1; y >= 1; --y) {
    std::uint64_t s = mulmod(y, y, c.p);
    root[s] = y;
    has[s] = 1;
  }
  has[0] = 1;
  std::vector<FpPoint> out{FpPoint::at_infinity()};
  for (std::uint64_t x = 0; x < c.p; ++x) {
    std::uint64_t r = rhs(c, x);
    if (!has[r]) continue;
    if (r == 0) {
      out.push_back(FpPoint::affine(x, 0));
      continue;
    }
    std::uint64_t y1 = root[r], y2 = c.p - y1;
    out.push_back(FpPoint::affine(x, std::min(y1, y2)));
    out.push_back(FpPoint::affine(x, std::max(y1, y2)));
  }
  return out;
}

std::uint64_t point_order(const FpCurve& c, const FpPoint& P, std::uint64_t n) {
  if (!multiply_u(c, P, n).infinity) throw InvariantViolation("point order does not divide the group order");
  std::uint64_t ord = n;
  for (std::uint64_t q : prime_divisors(n)) {
    while (ord % q == 0 && multiply_u(c, P, ord / q).infinity) ord /= q;
  }
  return ord;
}

std::uint64_t point_order(const FpCurve& c, const FpPoint& P) { return point_order(c, P, group_order(c)); }

namespace {

// Order of Q modulo the subgroup S (smallest k >= 1 with kQ in S), capped at cap.
std::uint64_t relative_order(const FpCurve& c, const FpPoint& Q, const std::set<FpPoint>& S, std::uint64_t cap) {
  FpPoint R = Q;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (S.count(R)) return k;
    R = add(c, R, Q);
  }
  return cap + 1;
}

std::set<FpPoint> cyclic_span(const FpCurve& c, const FpPoint& P) {
  std::set<FpPoint> S{FpPoint::at_infinity()};
  for (FpPoint R = P; !R.infinity; R = add(c, R, P)) S.insert(R);
  return S;
}

// Structure of a finite subgroup given as a point list with known orders.
void split_structure(const FpCurve& c, const std::vector<std::pair<FpPoint, std::uint64_t>>& pts, std::uint64_t size,
                     std::uint64_t& n1, std::uint64_t& n2, std::vector<FpPoint>& gens) {
  n2 = 1;
  FpPoint gen;
  for (const auto& [P, o] : pts)
    if (o > n2) {
      n2 = o;
      gen = P;
    }
  n1 = size / n2;
  gens.clear();
  if (size == 1) return;
  gens.push_back(gen);
  if (n1 == 1) return;
  auto span = cyclic_span(c, gen);
  for (const auto& [Q, o] : pts) {
    if (o != n1) continue;
    if (relative_order(c, Q, span, n1) == n1) {
      gens.push_back(Q);
      return;
    }
  }
  throw InvariantViolation("no independent second generator found");
}

}  // namespace

GroupStructure group_structure(const FpCurve& c, std::uint64_t ceiling) {
  auto pts = enumerate_points(c, ceiling);
  GroupStructure g;
  g.order = pts.size();
  std::vector<std::pair<FpPoint, std::uint64_t>> with_orders;
  with_orders.reserve(pts.size());
  for (const auto& P : pts) with_orders.emplace_back(P, point_order(c, P, g.order));
  split_structure(c, with_orders, g.order, g.n1, g.n2, g.generators);
  if (g.n2 % g.n1 || (c.p - 1) % g.n1) throw InvariantViolation("invariant factors violate n1 | gcd(n2, p-1)");
  return g;
}

EllPrimary ell_primary(const FpCurve& c, std::uint64_t ell, std::uint64_t ceiling) {
  if (ell < 2 || !is_prime(BigInt(static_cast<unsigned long>(ell)))) throw DomainError("ell must be prime");
  auto pts = enumerate_points(c, ceiling);
  std::uint64_t N = pts.size();
  EllPrimary out;
  out.ell = ell;
  unsigned k = 0;
  for (std::uint64_t n = N; n % ell == 0; n /= ell) {
    out.size *= ell;
    ++k;
  }
  std::vector<std::pair<FpPoint, std::uint64_t>> sylow;
  out.points_by_order.assign(k + 1, {});
  for (const auto& P : pts) {
    std::uint64_t o = point_order(c, P, N);
    std::uint64_t t = o;
    unsigned e = 0;
    while (t % ell == 0) {
      t /= ell;
      ++e;
    }
    if (t != 1) continue;
    sylow.emplace_back(P, o);
    out.points_by_order[e].push_back(P);
  }
  if (sylow.size() != out.size) throw InvariantViolation("Sylow subgroup size mismatch");
  split_structure(c, sylow, out.size, out.n1, out.n2, out.generators);
  out.cyclic = out.n1 == 1;
  std::size_t top = 0;
  for (std::uint64_t q = out.n2; q > 1; q /= ell) ++top;
  out.points_by_order.resize(top + 1);
  if (!out.cyclic && c.p % ell != 1)
    throw InvariantViolation("non-cyclic l-primary part with p != 1 mod l");
  return out;
}

bool is_supersingular(const FpCurve& c, std::uint64_t ceiling) { return group_order(c, ceiling) == c.p + 1; }

}  // namespace shascope
