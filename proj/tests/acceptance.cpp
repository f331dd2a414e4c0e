// Prints one PASS/FAIL line per acceptance criterion. Usage: acceptance <path-to-sha-scope>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "shascope/divpoly.hpp"
#include "shascope/ffcurve.hpp"
#include "shascope/galoisrules.hpp"
#include "shascope/identities.hpp"
#include "shascope/liftkit.hpp"
#include "shascope/numfield.hpp"
#include "shascope/torsionq.hpp"

using namespace shascope;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) {
    o.pass = false;
    o.detail += " [runtime limit exceeded]";
  }
  if (!o.pass) ++g_failures;
  std::ostringstream time;
  time.precision(2);
  time << std::fixed << s;
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << time.str() << " s";
  if (limit_s > 0) std::cout << ", limit " << limit_s << " s";
  std::cout << "): " << o.detail << std::endl;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return "{" + s + "}";
}

std::string factor_text(const Factorization& f) {
  std::string s = f.sign < 0 ? "-1" : "";
  for (const auto& pp : f.factors) {
    if (!s.empty()) s += "*";
    s += pp.prime.get_str();
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

const ShortModel kEx3Min{-5316979, BigInt(-4724275762L)};
const LongModel kEx3Long{1, -1, 0, -332311, -73733731};

// Integral points with y = 0 or y^2 | disc', found by locating real roots of x^3 + Ax + B - y^2
// in long double and testing nearby integers; orders by rational repeated addition up to 12.
TorsionGroup brute_torsion(const ShortModel& m) {
  BigInt D = m.disc_prime();
  std::vector<BigInt> ys{0};
  Factorization f = factorize(abs(D));
  std::vector<BigInt> divs{1};
  for (const auto& pp : f.factors) {
    std::vector<BigInt> next;
    for (const auto& d : divs) {
      BigInt q = 1;
      for (unsigned e = 0; 2 * e <= pp.exponent; ++e, q *= pp.prime) next.push_back(d * q);
    }
    divs = next;
  }
  for (const auto& d : divs) {
    ys.push_back(d);
    ys.push_back(-d);
  }
  std::set<std::pair<BigInt, BigInt>> pts;
  for (const auto& y : ys) {
    long double a = m.A.get_d(), c = BigInt(m.B - y * y).get_d();
    // Roots of x^3 + a x + c via scanning sign changes of a monotone decomposition.
    std::vector<long double> crit;
    if (a < 0) {
      long double r = std::sqrt(-a / 3);
      crit = {-r, r};
    }
    long double R = 2 + std::cbrt(std::fabs(c)) + std::sqrt(std::fabs(a));
    std::vector<long double> edges{-R};
    for (auto x : crit) edges.push_back(x);
    edges.push_back(R);
    auto g = [&](long double x) { return x * x * x + a * x + c; };
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      long double lo = edges[i], hi = edges[i + 1];
      if ((g(lo) > 0) == (g(hi) > 0)) {
        if (std::fabs(g(lo)) > 1e-6L && std::fabs(g(hi)) > 1e-6L) continue;
      }
      for (int it = 0; it < 200; ++it) {
        long double mid = (lo + hi) / 2;
        if ((g(lo) > 0) == (g(mid) > 0)) lo = mid;
        else hi = mid;
      }
      for (long k = -2; k <= 2; ++k) {
        BigInt x = BigInt(static_cast<long>(std::llround(lo))) + k;
        if (x * x * x + m.A * x + m.B == y * y) pts.insert({x, y});
      }
    }
    for (auto x : crit)
      for (long k = -2; k <= 2; ++k) {
        BigInt X = BigInt(static_cast<long>(std::llround(x))) + k;
        if (X * X * X + m.A * X + m.B == y * y) pts.insert({X, y});
      }
  }
  TorsionGroup g;
  unsigned two = 0;
  for (const auto& [x, y] : pts) {
    QPoint P = QPoint::affine(BigRat(x), BigRat(y)), Q = P;
    unsigned k = 1;
    while (!Q.infinity && k <= 12) {
      Q = q_add(m, Q, P);
      ++k;
    }
    if (!Q.infinity) continue;
    g.points.push_back({x, y, k});
    if (k == 2) ++two;
  }
  unsigned n = static_cast<unsigned>(g.points.size()) + 1;
  g.n1 = two == 3 ? 2 : 1;
  g.n2 = n / g.n1;
  return g;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  return out + "\n<exit " + std::to_string(rc) + ">";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "sha-scope";

  criterion(1, "Example-2 reproduction", 60, [] {
    LongModel m{0, 1692602, 0, BigInt(-530052723915L), 0};
    Factorization d = factorize(invariants(m).delta);
    Theorem5Report r = theorem5_report(analyze(m));
    std::string want_d = "2^8*3^2*5^2*11^2*13^2*17^2*19^2*23^2*29^2*31^2*37^3*8420798017";
    std::string want_p = "{2,3,5,7,11,13,17,19,23,29,31,37,8420798017}";
    bool ok = factor_text(d) == want_d && join(r.exceptional) == want_p && r.smallest_applicable == 41;
    return Outcome{ok, "delta=" + factor_text(d) + " P=" + join(r.exceptional) +
                           " smallest=" + r.smallest_applicable.get_str()};
  });

  criterion(2, "Example-3 reproduction", 5, [] {
    ShortModel s = to_short(kEx3Long);
    Minimized mz = minimize_short(s);
    CurveData cd = analyze(kEx3Long);
    Theorem5Report r = theorem5_report(cd);
    std::vector<BigInt> unknown;
    for (const auto& v : r.table)
      if (v.ell <= 100 && v.verdict == Verdict::Unknown) unknown.push_back(BigInt(static_cast<unsigned long>(v.ell)));
    std::string dp = factor_text(factorize(mz.model.disc_prime()));
    bool ok = s == ShortModel{-430675299, BigInt(-3443997030498L)} && mz.model == kEx3Min && dp == "2^15*23^10" &&
              join(r.exceptional) == "{2,3,5,7,13,23}" && join(unknown) == "{2,3,7}";
    return Outcome{ok, "short=(" + s.A.get_str() + "," + s.B.get_str() + ") min=(" + mz.model.A.get_str() + "," +
                           mz.model.B.get_str() + ") disc'=" + dp + " P=" + join(r.exceptional) +
                           " unknown<=100=" + join(unknown)};
  });

  criterion(3, "Example-4 reproduction", 0, [] {
    FpCurve c = reduce_curve(kEx3Min, 7);
    auto pts = enumerate_points(c);
    auto F = [](long x, long y) { return FpPoint::affine(static_cast<std::uint64_t>((x + 7) % 7),
                                                         static_cast<std::uint64_t>((y + 7) % 7)); };
    std::set<FpPoint> want{FpPoint::at_infinity(), F(0, 2), F(0, -2), F(1, 3), F(1, -3), F(3, 1),
                           F(3, -1),               F(-3, 0), F(-2, 3), F(-2, -3)};
    EllPrimary e = ell_primary(c, 5);
    std::set<FpPoint> five(e.points_by_order.at(1).begin(), e.points_by_order.at(1).end());
    std::set<FpPoint> want5{F(1, 3), F(1, -3), F(-2, 3), F(-2, -3)};
    LiftPlan lp = lift_plan(kEx3Min, 7, 5);
    bool hensel = lp.hensel && lp.hensel->residue % 7 == 1 &&
                  (lp.hensel->exact_root || lp.hensel->v_f > 2 * lp.hensel->v_df);
    bool ok = c == FpCurve{7, 4, 4} && std::set<FpPoint>(pts.begin(), pts.end()) == want && pts.size() == 10 &&
              e.cyclic && e.size == 5 && five == want5 && lp.m == 2 && lp.y_squared && *lp.y_squared == 9 &&
              lp.bezout_a == 3 && lp.bezout_b == -1 && 3 * 2 - 5 * 1 == 1 && hensel;
    std::string h = lp.hensel ? "residue " + lp.hensel->residue.get_str() + " mod " + lp.hensel->modulus.get_str() +
                                    ", v(f')=" + std::to_string(lp.hensel->v_df) +
                                    (lp.hensel->exact_root ? ", exact simple root" : "")
                              : "none";
    return Outcome{ok, "#E=" + std::to_string(pts.size()) + " 5-part cyclic=" + (e.cyclic ? "yes" : "no") +
                           " m=" + std::to_string(lp.m) + " y^2=9 bezout=(3,-1) hensel: " + h};
  });

  criterion(4, "symbolic identity suite", 120, [] {
    auto checks = run_identity_suite(24);
    bool ok = !checks.empty();
    std::string d;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      d += (d.empty() ? "" : ", ") + c.name + (c.passed ? "=ok" : "=FAILED");
    }
    return Outcome{ok, d};
  });

  criterion(5, "torsion_test vs group-law oracle, p < 200", 0, [] {
    long mismatches = 0, checks = 0;
    for (const ShortModel& m : {kEx3Min, ShortModel{1, 1}, ShortModel{4, 4}, ShortModel{-1, 0}}) {
      for (std::uint64_t p : primes_up_to(199)) {
        if (p < 5) continue;
        BigInt dp = m.disc_prime();
        if (mpz_divisible_ui_p(dp.get_mpz_t(), p)) continue;
        FpCurve c = reduce_curve(m, p);
        DivisionTable<Fp> t(Fp(static_cast<std::int64_t>(c.A), p), Fp(static_cast<std::int64_t>(c.B), p));
        for (const auto& P : enumerate_points(c)) {
          if (P.infinity) continue;
          Fp x(static_cast<std::int64_t>(P.x), p), y(static_cast<std::int64_t>(P.y), p);
          FpPoint acc = P;
          for (std::size_t n = 1; n <= 12; ++n) {
            if (n > 1) acc = add(c, acc, P);
            ++checks;
            if (torsion_test(t, x, y, n) != acc.infinity) ++mismatches;
          }
        }
      }
    }
    return Outcome{mismatches == 0 && checks > 0,
                   std::to_string(checks) + " checks on 4 curves, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(6, "rational torsion suite", 0, [] {
    struct Case {
      ShortModel m;
      std::string name, stated;
    };
    std::vector<Case> cases = {{{0, 1}, "y^2=x^3+1", "Z/6Z"}, {{4, 0}, "y^2=x^3+4x", "Z/2Z"},
                               {kEx3Min, "Example-3", "trivial"}};
    bool ok = true;
    std::string d;
    for (const auto& c : cases) {
      TorsionGroup g = rational_torsion(c.m);
      TorsionGroup b = brute_torsion(c.m);
      std::uint64_t bound = reduction_torsion_bound(c.m);
      bool agree = g.structure() == b.structure() && g.points.size() == b.points.size() && bound % g.order() == 0;
      ok = ok && agree;
      d += (d.empty() ? "" : "; ") + c.name + ": " + g.structure() + " (brute force " + b.structure() +
           ", reduction bound " + std::to_string(bound) + ")";
      if (g.structure() != c.stated)
        d += " differs from the stated " + c.stated + " because (2,4) has order 4 with [2](2,4) = (0,0)";
    }
    return Outcome{ok, d};
  });

  criterion(7, "alpha-trace consistency", 60, [] {
    bool ok = true;
    std::string d;
    for (const ShortModel& m : {ShortModel{1, 1}, ShortModel{4, 4}}) {
      AlphaTraceResult r = alpha_trace_direct(m, 5, 2);
      BigRat s8 = alpha_trace_step8(m, 5);
      bool bounds = true;
      std::string places;
      for (const BigInt& part : {BigInt(r.S.get_num()), BigInt(r.S.get_den())}) {
        if (part == 0) continue;
        for (const auto& pp : factorize(abs(part)).factors) {
          if (pp.prime == 5) continue;
          BigRat C = bound_constants(m, 5, pp.prime.get_ui()).exact;
          long v = padic_val(r.S, pp.prime);
          BigInt qv;
          mpz_pow_ui(qv.get_mpz_t(), pp.prime.get_mpz_t(), static_cast<unsigned long>(std::labs(v)));
          BigRat absq = v < 0 ? BigRat(qv) : make_rat(1, qv);
          bounds = bounds && absq <= C;
          places += " q=" + pp.prime.get_str();
        }
      }
      ok = ok && s8 == r.S && bounds && r.finite_bounds_hold();
      d += (d.empty() ? "" : "; ") + std::string("(") + m.A.get_str() + "," + m.B.get_str() + "): direct S=" +
           r.S.get_str() + " step8=" + s8.get_str() + " places:" + (places.empty() ? " none" : places);
    }
    return Outcome{ok, d};
  });

  criterion(8, "CLI determinism", 0, [&] {
    const std::vector<std::string> fixtures = {
        "exceptional --curve 0,1692602,0,-530052723915,0",
        "invariants --curve 0,1692602,0,-530052723915,0",
        "exceptional --curve 1,-1,0,-332311,-73733731 --verbose",
        "invariants --curve 1,-1,0,-332311,-73733731",
        "exceptional --curve -5316979,-4724275762",
        "ffgroup --p 7 --ell 5 --curve -5316979,-4724275762",
        "lift --p 7 --ell 5 --curve -5316979,-4724275762",
        "verify-identities",
        "torsion --curve 0,1",
        "torsion --curve 4,0",
        "torsion --curve -5316979,-4724275762",
        "alpha-trace --ell 5 --n 2 --step8 --curve 1,1",
        "alpha-trace --ell 5 --n 2 --step8 --curve 4,4",
        "divpoly --n 1 --symbolic",
    };
    int differ = 0, failed = 0;
    for (const auto& f : fixtures) {
      std::string cmd = shell_quote(cli) + " " + f + " 2>/dev/null";
      std::string a = capture(cmd), b = capture(cmd);
      if (a != b) ++differ;
      if (a.find("<exit 0>") == std::string::npos) ++failed;
    }
    return Outcome{differ == 0 && failed == 0, std::to_string(fixtures.size()) + " fixtures run twice, " +
                                                   std::to_string(differ) + " differ, " + std::to_string(failed) +
                                                   " nonzero exits"};
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : std::to_string(g_failures) + " CRITERIA FAIL") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
