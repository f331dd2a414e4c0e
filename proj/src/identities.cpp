#include "shascope/identities.hpp"

#include <chrono>
#include <functional>

#include "shascope/divpoly.hpp"
#include "shascope/numfield.hpp"

namespace shascope {

const std::vector<ShortModel>& desk_curves() {
  static const std::vector<ShortModel> v{{1, 1}, {4, 4}, {-1, 1}};
  return v;
}

namespace {

using SPoly = ExactPoly<SymPoly>;

bool all_even(const SPoly& f) {
  for (const auto& c : f.coeffs())
    for (const auto& [e, k] : c.terms())
      if (!mpz_even_p(k.get_mpz_t())) return false;
  return true;
}

IdentityCheck timed(const std::string& name, const std::function<bool(std::string&)>& body) {
  IdentityCheck c;
  c.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(unsigned max_n) {
  const SymPoly A = SymPoly::var(SymPoly::kA), B = SymPoly::var(SymPoly::kB), L = SymPoly::var(SymPoly::kL);
  DivisionTable<SymPoly> t(A, B);
  std::vector<IdentityCheck> out;

  out.push_back(timed("lemma5_degree_leading_subleading", [&](std::string& d) {
    for (unsigned n = 1; n <= max_n; ++n) {
      if (!check_lemma5(t, n)) {
        d = "fails at n=" + std::to_string(n);
        return false;
      }
      if (n % 2 == 0 && !all_even(t.f(n))) {
        d = "f_n not in 2Z[A,B][X] at n=" + std::to_string(n);
        return false;
      }
    }
    d = "n=1.." + std::to_string(max_n);
    return true;
  }));

  out.push_back(timed("eq46_f_phi_minus_g_psi", [&](std::string& d) {
    d = "f*phi - g*psi = 4A^3 + 27B^2 over Z[A,B]";
    return verify_eq46(A, B);
  }));

  out.push_back(timed("cor3_psi_squared", [&](std::string& d) {
    for (unsigned n = 1; n <= 12; ++n) {
      SPoly s = psi_squared(t, n);
      std::size_t e = n * n - 1;
      if (s.degree() != static_cast<int>(e) || !(s.leading() == SymPoly(static_cast<long>(n * n))) ||
          (e > 0 && !s.coeff(e - 1).is_zero())) {
        d = "fails at n=" + std::to_string(n);
        return false;
      }
    }
    d = "n=1..12";
    return true;
  }));

  out.push_back(timed("cor4_quotient_leading_terms", [&](std::string& d) {
    for (auto [ell, n] : {std::pair<unsigned, unsigned>{3, 2}, {5, 2}}) {
      SPoly g = quotient_g(t, ell, n);
      std::size_t deg = fn_degree(ipow(ell, n)) - fn_degree(ipow(ell, n - 1));
      if (g.degree() != static_cast<int>(deg) || !(g.leading() == SymPoly(static_cast<long>(ell)))) {
        d = "quotient degree/leading coefficient fails at l=" + std::to_string(ell);
        return false;
      }
      // Top two coefficients of g^2: lc^2 and 2 lc g_{d-1}.
      SymPoly top = g.leading() * g.leading();
      SymPoly next = SymPoly(2) * g.leading() * g.coeff(deg - 1);
      if (2 * deg != ipow(ell, 2 * n - 2) * (ell * ell - 1) || !(top == SymPoly(static_cast<long>(ell * ell))) ||
          !next.is_zero()) {
        d = "squared quotient fails at l=" + std::to_string(ell);
        return false;
      }
    }
    d = "(l,n) in {(3,2),(5,2)}";
    return true;
  }));

  out.push_back(timed("cor5_phi_coefficient", [&](std::string& d) {
    for (unsigned m = 1; m <= 11; ++m) {
      SPoly phi = build_phi(t, m, L);
      std::size_t e = m * m;
      if (phi.degree() != static_cast<int>(e) || !(phi.leading() == SymPoly(1)) ||
          !(phi.coeff(e - 1) == SymPoly(-static_cast<long>(e)) * L)) {
        d = "fails at m=" + std::to_string(m);
        return false;
      }
    }
    d = "m=1..11, lambda symbolic";
    return true;
  }));

  out.push_back(timed("cor6_zero_trace", [&](std::string& d) {
    for (const auto& c : desk_curves()) {
      for (unsigned ell : {5u, 7u, 11u, 13u})
        if (!cor6_check(c, ell, 1)) {
          d = "fails at l=" + std::to_string(ell);
          return false;
        }
      if (!cor6_check(c, 5, 2)) {
        d = "fails at (5,2)";
        return false;
      }
    }
    d = "l in {5,7,11,13} n=1 and (5,2) on (1,1), (4,4), (-1,1)";
    return true;
  }));

  out.push_back(timed("cor7_root_sum", [&](std::string& d) {
    for (unsigned ell : {3u, 5u, 7u}) {
      SPoly phi = build_phi(t, ell, L);
      // Sum of the l^2 roots is minus the sub-leading coefficient.
      if (!(-phi.coeff(ell * ell - 1) == SymPoly(static_cast<long>(ell * ell)) * L)) {
        d = "fails at l=" + std::to_string(ell);
        return false;
      }
    }
    d = "l in {3,5,7}, A, B, lambda symbolic";
    return true;
  }));
  return out;
}

}  // namespace shascope
