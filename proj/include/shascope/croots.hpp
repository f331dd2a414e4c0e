#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "shascope/poly.hpp"

namespace shascope {

// Roughly 330 bits of working precision.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& a);

struct IsolatedRoot {
  Complex center;
  // Certified: exactly one root of the polynomial lies within this radius of center.
  Real radius;
};

// Isolates all complex roots of a squarefree rational polynomial by Aberth iteration
// followed by Newton-inclusion discs; throws InvariantViolation if the discs overlap.
std::vector<IsolatedRoot> isolate_roots(const ExactPoly<BigRat>& p);

Real to_real(const BigRat& r);
std::string to_decimal(const Real& r, int digits = 40);

}  // namespace shascope
