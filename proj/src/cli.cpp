#include "shascope/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "shascope/divpoly.hpp"
#include "shascope/ffcurve.hpp"
#include "shascope/galoisrules.hpp"
#include "shascope/identities.hpp"
#include "shascope/liftkit.hpp"
#include "shascope/numfield.hpp"
#include "shascope/torsionq.hpp"

namespace shascope {

using nlohmann::json;

namespace {

// Integers with |n| < 2^53 are JSON numbers; larger ones are decimal strings.
json jint(const BigInt& n) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(n) < limit) return json(n.get_si());
  return json(n.get_str());
}
json jrat(const BigRat& r) { return r.get_den() == 1 ? jint(BigInt(r.get_num())) : json(r.get_str()); }

json jfactorization(const Factorization& f) {
  json fs = json::array();
  std::string pretty = f.sign < 0 ? "-1" : "";
  for (const auto& pp : f.factors) {
    json e{{"prime", jint(pp.prime)}, {"exponent", pp.exponent}};
    if (!pp.certified) e["certified"] = false;
    fs.push_back(e);
    if (!pretty.empty()) pretty += " * ";
    pretty += pp.prime.get_str() + (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : "");
  }
  if (!f.complete()) pretty += (pretty.empty() ? "" : " * ") + ("[" + f.unfactored.get_str() + "]");
  if (pretty.empty()) pretty = "1";
  return json{{"sign", f.sign}, {"factors", fs}, {"complete", f.complete()}, {"unfactored", jint(f.unfactored)},
              {"text", pretty}};
}

json jshort(const ShortModel& m) { return json{{"A", jint(m.A)}, {"B", jint(m.B)}}; }
json jlong(const LongModel& m) {
  return json{{"a1", jint(m.a1)}, {"a2", jint(m.a2)}, {"a3", jint(m.a3)}, {"a4", jint(m.a4)}, {"a6", jint(m.a6)}};
}

json jinvariants(const Invariants& v) {
  return json{{"b2", jint(v.b2)},     {"b4", jint(v.b4)}, {"b6", jint(v.b6)},
              {"b8", jint(v.b8)},     {"c4", jint(v.c4)}, {"c6", jint(v.c6)},
              {"delta", jint(v.delta)}, {"delta_prime", jint(v.delta_prime)}, {"j", jrat(v.j)}};
}

json jreport(const ReductionReport& r) {
  json j{{"p", jint(r.p)},
         {"kind", to_string(r.kind)},
         {"potential", to_string(r.potential)},
         {"ord_delta", r.ord_delta},
         {"ord_c4", r.c4_zero ? json(nullptr) : json(r.ord_c4)},
         {"ord_j", r.j_zero ? json(nullptr) : json(r.ord_j)},
         {"minimal_certified", r.minimal_certified},
         {"model", r.model_source}};
  j["split"] = r.split ? json(to_string(*r.split)) : json(nullptr);
  j["caveat"] = r.caveat ? json(*r.caveat) : json(nullptr);
  return j;
}

json jpoint(const FpPoint& P) {
  if (P.infinity) return json{{"infinity", true}};
  return json{{"x", P.x}, {"y", P.y}};
}

json jpoints(const std::vector<FpPoint>& v) {
  json a = json::array();
  for (const auto& P : v) a.push_back(jpoint(P));
  return a;
}

template <class T>
json jpoly(const ExactPoly<T>& p) {
  json cs = json::array();
  for (const auto& c : p.coeffs()) cs.push_back(ring_str(c));
  return json{{"degree", p.degree()}, {"poly", p.str()}, {"coefficients", cs}};
}

struct CurveArg {
  bool is_long = false;
  ShortModel s;
  LongModel l;
  ShortModel as_short() const { return is_long ? to_short(l) : s; }
};

CurveArg parse_curve(const std::string& text) {
  std::vector<BigInt> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_bigint(item));
  CurveArg c;
  if (v.size() == 2) {
    c.s = ShortModel{v[0], v[1]};
  } else if (v.size() == 5) {
    c.is_long = true;
    c.l = LongModel{v[0], v[1], v[2], v[3], v[4]};
  } else {
    throw CLI::ValidationError("--curve", "expected \"A,B\" or \"a1,a2,a3,a4,a6\"");
  }
  return c;
}

json jverdict(const ImageVerdict& v, bool with_reasons) {
  json j{{"ell", v.ell}, {"verdict", to_string(v.verdict)}};
  j["chain"] = v.chain.empty() ? json(nullptr) : json(v.chain);
  if (with_reasons) {
    json rs = json::array();
    for (const auto& r : v.reasons) rs.push_back(json{{"rule", r.rule}, {"fired", r.fired}, {"params", r.params}});
    j["reasons"] = rs;
  }
  return j;
}

json jlift(const LiftPlan& p) {
  json j{{"p", p.p},
         {"ell", p.ell},
         {"n", p.n},
         {"m", p.m},
         {"group_order", p.order},
         {"ell_part_cyclic", p.ell_part_cyclic},
         {"generator", jpoint(p.generator)},
         {"model", jshort(p.model)},
         {"reduced_curve", json{{"p", p.reduced.p}, {"A", p.reduced.A}, {"B", p.reduced.B}}},
         {"bezout", json{{"a", jint(p.bezout_a)}, {"b", jint(p.bezout_b)}}},
         {"replay_consistent", replay_decomposition(p)}};
  j["y_lift"] = p.y_lift ? jint(*p.y_lift) : json(nullptr);
  j["y_squared"] = p.y_squared ? jrat(*p.y_squared) : json(nullptr);
  j["cubic"] = p.cubic ? jpoly(*p.cubic) : json(nullptr);
  j["target_x"] = p.target_x ? json(*p.target_x) : json(nullptr);
  if (p.hensel) {
    const auto& h = *p.hensel;
    j["hensel"] = json{{"residue", jint(h.residue)},     {"modulus", jint(h.modulus)},
                       {"v_f", h.exact_root ? json(nullptr) : json(h.v_f)},
                       {"exact_root", h.exact_root},     {"v_df", h.v_df},
                       {"derivative_unit", h.derivative_unit}};
  } else {
    j["hensel"] = nullptr;
  }
  return j;
}

json error_doc(const std::string& kind, const std::string& msg) {
  return json{{"error", json{{"kind", kind}, {"message", msg}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sha-scope: exact invariants, division polynomials and exceptional primes of elliptic curves over Q",
               "sha-scope"};
  app.require_subcommand(1);
  std::string curve_text;
  std::uint64_t effort = 20;
  auto add_curve = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--curve", curve_text, "curve as \"A,B\" or \"a1,a2,a3,a4,a6\"");
    if (required) o->required();
    s->add_option("--effort", effort, "factoring effort, millions of Pollard-rho steps")->capture_default_str();
  };

  auto* inv = app.add_subcommand("invariants", "Weierstrass invariants, short and minimal models");
  add_curve(inv, true);

  std::string p_text;
  auto* red = app.add_subcommand("reduce", "reduction type at one prime");
  add_curve(red, true);
  red->add_option("--p", p_text, "prime")->required();

  auto* bad = app.add_subcommand("bad-primes", "reduction reports at every bad prime");
  add_curve(bad, true);

  unsigned n = 1;
  bool symbolic = false;
  auto* dp = app.add_subcommand("divpoly", "division polynomial f_n");
  add_curve(dp, false);
  dp->add_option("--n", n, "index n >= 1")->required();
  dp->add_flag("--symbolic", symbolic, "work over Z[A,B]");

  unsigned max_n = 24;
  auto* vi = app.add_subcommand("verify-identities", "exact division-polynomial identity suite");
  vi->add_option("--max-n", max_n, "largest n for the degree law")->capture_default_str();

  std::uint64_t p = 0, ell = 0;
  auto* ffg = app.add_subcommand("ffgroup", "group of the reduction mod p");
  add_curve(ffg, true);
  ffg->add_option("--p", p, "prime >= 5")->required();
  ffg->add_option("--ell", ell, "prime for the l-primary part");

  auto* tor = app.add_subcommand("torsion", "rational torsion subgroup");
  add_curve(tor, true);

  unsigned level = 1;
  auto* ct = app.add_subcommand("cor-traces", "vanishing traces of torsion x-coordinates");
  add_curve(ct, true);
  ct->add_option("--ell", ell, "odd prime")->required();
  ct->add_option("--n", level, "level n >= 1")->required();

  bool step8 = false, archimedean = false;
  auto* at = app.add_subcommand("alpha-trace", "normalized root-sum of alpha = l^3 disc'/y^2");
  add_curve(at, true);
  at->add_option("--ell", ell, "prime > 3")->required();
  at->add_option("--n", level, "level 1 or 2")->required();
  at->add_flag("--step8", step8, "also evaluate the level-2 closed form");
  at->add_flag("--archimedean", archimedean, "also compute the archimedean bound constant");

  auto* lf = app.add_subcommand("lift", "lifting plan for the l-part of E~(F_p)");
  add_curve(lf, true);
  lf->add_option("--p", p, "prime >= 5")->required();
  lf->add_option("--ell", ell, "odd prime")->required();

  std::uint64_t scan = kDefaultScanBound;
  bool verbose = false, mazur = false;
  auto* ex = app.add_subcommand("exceptional", "exceptional primes and per-l image verdicts");
  add_curve(ex, true);
  ex->add_option("--scan-bound", scan, "scan every prime l up to this bound")->capture_default_str();
  ex->add_flag("--verbose", verbose, "include rule reasons for every verdict");
  ex->add_flag("--mazur-chain", mazur, "enable the isogeny-prime list chain");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  json doc;
  try {
    FactorBudget budget;
    budget.rho_iterations = effort * 1000000ULL;
    CLI::App* sub = app.get_subcommands().front();
    CurveArg curve;
    if (!curve_text.empty()) curve = parse_curve(curve_text);

    if (sub == inv) {
      doc["input"] = curve.is_long ? jlong(curve.l) : jshort(curve.s);
      Invariants v = curve.is_long ? invariants(curve.l) : invariants(curve.s);
      doc["invariants"] = jinvariants(v);
      doc["delta_factorization"] = jfactorization(factorize_partial(v.delta, budget));
      ShortModel s = curve.as_short();
      Minimized mz = minimize_short(s);
      doc["short_model"] = jshort(s);
      doc["minimal_model"] = jshort(mz.model);
      doc["u"] = jint(mz.u);
      BigInt dpm = mz.model.disc_prime();
      doc["minimal_delta_prime"] = jint(dpm);
      doc["minimal_delta_prime_factorization"] = jfactorization(factorize_partial(dpm, budget));
    } else if (sub == red) {
      BigInt P = parse_bigint(p_text);
      doc = curve.is_long ? jreport(reduction_report(curve.l, P)) : jreport(reduction_report(curve.s, P));
    } else if (sub == bad) {
      auto reps = curve.is_long ? bad_primes(curve.l, budget) : bad_primes(curve.s, budget);
      json a = json::array();
      for (const auto& r : reps) a.push_back(jreport(r));
      doc["reports"] = a;
    } else if (sub == dp) {
      if (n < 1) throw DomainError("n must be >= 1");
      doc["n"] = n;
      if (symbolic) {
        DivisionTable<SymPoly> t(SymPoly::var(SymPoly::kA), SymPoly::var(SymPoly::kB));
        doc["ring"] = "Z[A,B]";
        doc.update(jpoly(t.f(n)));
      } else {
        if (curve_text.empty()) throw CLI::RequiredError("--curve (or --symbolic)");
        ShortModel s = curve.as_short();
        if (s.disc_prime() == 0) throw SingularCurve(BigInt(-48 * s.A));
        DivisionTable<BigInt> t(s.A, s.B);
        doc["ring"] = "Z";
        doc["curve"] = jshort(s);
        doc.update(jpoly(t.f(n)));
      }
    } else if (sub == vi) {
      json a = json::array();
      bool all = true;
      for (const auto& c : run_identity_suite(max_n)) {
        a.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
      }
      doc["checks"] = a;
      doc["all_passed"] = all;
    } else if (sub == ffg) {
      FpCurve c = reduce_curve(curve.as_short(), p);
      GroupStructure g = group_structure(c);
      doc["curve"] = json{{"p", c.p}, {"A", c.A}, {"B", c.B}};
      doc["order"] = g.order;
      doc["invariant_factors"] = json::array({g.n1, g.n2});
      doc["cyclic"] = g.n1 == 1;
      doc["generators"] = jpoints(g.generators);
      doc["supersingular"] = g.order == c.p + 1;
      doc["a_p"] = static_cast<std::int64_t>(c.p + 1) - static_cast<std::int64_t>(g.order);
      if (g.order <= 10000) doc["points"] = jpoints(enumerate_points(c));
      if (ell) {
        EllPrimary e = ell_primary(c, ell);
        json byo = json::array();
        for (const auto& lvl : e.points_by_order) byo.push_back(jpoints(lvl));
        doc["ell_primary"] = json{{"ell", e.ell},       {"size", e.size},
                                  {"invariant_factors", json::array({e.n1, e.n2})},
                                  {"cyclic", e.cyclic}, {"generators", jpoints(e.generators)},
                                  {"points_by_order", byo}};
      }
    } else if (sub == tor) {
      ShortModel s = curve.as_short();
      TorsionGroup g = rational_torsion(s, budget);
      doc["model"] = jshort(s);
      doc["structure"] = g.structure();
      doc["invariant_factors"] = json::array({g.n1, g.n2});
      doc["order"] = g.order();
      json pts = json::array();
      for (const auto& tp : g.points) pts.push_back(json{{"x", jint(tp.x)}, {"y", jint(tp.y)}, {"order", tp.order}});
      doc["points"] = pts;
      doc["reduction_bound"] = reduction_torsion_bound(s);
    } else if (sub == ct) {
      ShortModel s = curve.as_short();
      DivisionTable<BigInt> t(s.A, s.B);
      ExactPoly<BigInt> g = quotient_g(t, ell, level);
      doc["ell"] = ell;
      doc["n"] = level;
      doc["quotient_degree"] = g.degree();
      doc["quotient_leading"] = jint(g.leading());
      doc["subleading_coefficient"] = jint(g.coeff(static_cast<std::size_t>(g.degree() - 1)));
      doc["cor6"] = cor6_check(s, static_cast<unsigned>(ell), level);
      doc["cor7_symbolic_lambda"] = cor7_check_symbolic(s, static_cast<unsigned>(ell));
    } else if (sub == at) {
      ShortModel s = curve.as_short();
      AlphaTraceResult r = alpha_trace_direct(s, static_cast<unsigned>(ell), level);
      doc["ell"] = ell;
      doc["n"] = level;
      doc["S"] = jrat(r.S);
      doc["root_sum"] = jrat(r.root_sum);
      doc["degree"] = r.degree;
      doc["finite_bounds_hold"] = r.finite_bounds_hold();
      json bounds = json::object();
      if (r.S != 0) {
        for (const auto& pp : factorize(BigInt(r.S.get_den()), budget).factors) {
          if (pp.prime == ell) continue;
          BoundConstant bc = bound_constants(s, static_cast<unsigned>(ell), pp.prime.get_ui());
          long v = padic_val(r.S, pp.prime);
          BigInt qv;
          mpz_pow_ui(qv.get_mpz_t(), pp.prime.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
          BigRat absq = v < 0 ? BigRat(qv) : make_rat(1, qv);
          bounds[pp.prime.get_str()] = json{{"C", jrat(bc.exact)}, {"abs_S", jrat(absq)}, {"holds", absq <= bc.exact}};
        }
      }
      doc["finite_bounds"] = bounds;
      if (step8) {
        BigRat s8 = alpha_trace_step8(s, static_cast<unsigned>(ell));
        BigRat d2 = level == 2 ? r.S : alpha_trace_direct(s, static_cast<unsigned>(ell), 2).S;
        doc["step8"] = jrat(s8);
        doc["step8_equals_direct"] = s8 == d2;
      }
      if (archimedean) {
        BoundConstant bc = bound_constants(s, static_cast<unsigned>(ell), 0);
        doc["archimedean"] = json{{"C", bc.decimal}, {"delta_lower_bound", bc.delta}};
      }
    } else if (sub == lf) {
      doc = jlift(lift_plan(curve.as_short(), p, ell));
    } else if (sub == ex) {
      CurveData cd = curve.is_long ? analyze(curve.l, budget) : analyze(curve.s, budget);
      RuleSet rules;
      rules.mazur_list = mazur;
      Theorem5Report rep = theorem5_report(cd, scan, rules);
      json P = json::array();
      for (const auto& q : rep.exceptional) P.push_back(jint(q));
      doc["curve"] = jshort(rep.curve);
      doc["exceptional_set"] = P;
      doc["smallest_applicable"] = rep.smallest_applicable == 0 ? json(nullptr) : jint(rep.smallest_applicable);
      doc["scan_bound"] = rep.scan_bound;
      doc["serre_bound"] = jint(rep.serre_bound);
      doc["tail_certified"] = rep.tail_certified;
      doc["incomplete"] = rep.incomplete;
      doc["unfactored"] = jint(rep.unfactored);
      doc["notes"] = rep.notes;
      doc["delta_prime_factorization"] = jfactorization(cd.disc_prime);
      json reps = json::array();
      for (const auto& r : cd.reports) reps.push_back(jreport(r));
      doc["bad_primes"] = reps;
      json unknown = json::array(), table = json::array();
      for (const auto& v : rep.table) {
        if (v.verdict == Verdict::Unknown) unknown.push_back(v.ell);
        table.push_back(jverdict(v, verbose || v.verdict == Verdict::Unknown));
      }
      doc["unknown_verdicts"] = unknown;
      doc["verdicts"] = table;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const BudgetError& e) {
    out << error_doc("budget", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    out << error_doc("domain", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    out << error_doc("internal", e.what()).dump() << "\n";
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

}  // namespace shascope
