#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shascope/curves.hpp"
#include "shascope/ffcurve.hpp"
#include "shascope/poly.hpp"

namespace shascope {

// A residue a mod p^k with v_p(f(a)) > 2 v_p(f'(a)): by Hensel's lemma f has a unique
// p-adic root congruent to a mod p^(v(f'(a))+1), and that root is simple.
struct HenselCertificate {
  BigInt residue;       // a
  BigInt modulus;       // p^k
  unsigned v_f = 0;     // v_p(f(a)), capped at 64 when f(a) = 0
  bool exact_root = false;
  unsigned v_df = 0;    // v_p(f'(a))
  bool derivative_unit = false;  // the classical case v_p(f'(target)) = 0
};

struct LiftPlan {
  std::uint64_t p = 0, ell = 0;
  unsigned n = 0;           // v_l(#E~(F_p))
  std::uint64_t m = 0;      // prime-to-l part
  std::uint64_t order = 0;  // #E~(F_p)
  bool ell_part_cyclic = true;
  FpPoint generator;        // infinity when n = 0
  ShortModel model;         // p-minimized model used for the cubic
  FpCurve reduced;
  std::optional<BigInt> y_lift;
  std::optional<BigRat> y_squared;
  std::optional<ExactPoly<BigInt>> cubic;  // X^3 + A X + B - y^2
  std::optional<std::uint64_t> target_x;
  std::optional<HenselCertificate> hensel;
  BigInt bezout_a, bezout_b;  // m a + l b = 1
};

LiftPlan lift_plan(const ShortModel& m, std::uint64_t p, std::uint64_t ell);

HenselCertificate hensel_certificate(const ExactPoly<BigInt>& f, const BigInt& p, const BigInt& target,
                                     unsigned max_level = 16);

// For every P in E~(F_p): [m]P lies in <generator> and P - [a][m]P lies in [l]E~(F_p).
bool replay_decomposition(const LiftPlan& plan);

std::vector<BigRat> admissible_set(unsigned C);

struct TowerDescriptor {
  unsigned C = 0;
  std::uint64_t ell = 0;
  std::vector<std::uint64_t> radical_primes;  // primes <= C other than l
  std::vector<std::string> radicals;          // "sqrt(-1)", "sqrt(p)", ..., "sqrt(l)"
  unsigned cubic_layers = 0;                  // |U|
  unsigned s_bound = 0, t_bound = 0;          // degree divides 2^s 3^t
};

TowerDescriptor tower_descriptor(unsigned C, std::uint64_t ell);

}  // namespace shascope
