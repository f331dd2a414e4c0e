#include "shascope/croots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace shascope {

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const BigRat& r) {
  Real num(r.get_num().get_str()), den(r.get_den().get_str());
  return num / den;
}

std::string to_decimal(const Real& r, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::scientific << r;
  return os.str();
}

namespace {

// p(z), p'(z) and the absolute-value majorants sum |c_k| |z|^k, sum k |c_k| |z|^(k-1).
void horner(const std::vector<Real>& c, const Complex& z, Complex& v, Complex& dv, Real& mag, Real& dmag) {
  v = {Real(0), Real(0)};
  dv = {Real(0), Real(0)};
  mag = 0;
  dmag = 0;
  Real az = abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    dv = dv * z + v;
    dmag = dmag * az + mag;
    v = v * z + Complex{c[k], Real(0)};
    mag = mag * az + abs(c[k]);
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const ExactPoly<BigRat>& poly) {
  const int d = poly.degree();
  if (d < 1) return {};
  std::vector<Real> c;
  for (const auto& q : poly.coeffs()) c.push_back(to_real(q));
  for (auto& v : c) v /= to_real(poly.leading());

  // Fujiwara-type bound on root moduli.
  Real bound = 0;
  for (int k = 0; k < d; ++k) {
    Real t = pow(abs(c[k]), Real(1) / Real(d - k));
    if (t > bound) bound = t;
  }
  bound = 2 * bound + 1;

  // Coarse phase in long double, then polishing at full precision.
  using CL = std::complex<long double>;
  std::vector<long double> cl(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) cl[k] = c[k].convert_to<long double>();
  const long double lb = bound.convert_to<long double>();
  const long double pil = boost::math::constants::pi<long double>();
  std::vector<CL> zl(d);
  for (int k = 0; k < d; ++k) zl[k] = std::polar(lb / 2, 2 * pil * k / d + 0.4L);
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int i = 0; i < d; ++i) {
      CL v = 0, dv = 0;
      for (std::size_t k = cl.size(); k-- > 0;) {
        dv = dv * zl[i] + v;
        v = v * zl[i] + cl[k];
      }
      if (v == CL(0)) continue;
      CL w = v / dv, s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += 1.0L / (zl[i] - zl[j]);
      CL corr = w / (1.0L - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      zl[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1 + std::abs(zl[i])));
    }
    if (worst < 1e-16L) break;
  }
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) z[k] = {Real(zl[k].real()), Real(zl[k].imag())};

  const Real tol = pow(Real(10), -80);
  std::vector<bool> done(d, false);
  for (int iter = 0; iter < 2000; ++iter) {
    bool all = true;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      Complex v, dv;
      Real mag, dmag;
      horner(c, z[i], v, dv, mag, dmag);
      if (v.re == 0 && v.im == 0) {
        done[i] = true;
        continue;
      }
      Complex w = v / dv;
      Complex s{Real(0), Real(0)};
      for (int j = 0; j < d; ++j)
        if (j != i) s = s + Complex{Real(1), Real(0)} / (z[i] - z[j]);
      Complex corr = w / (Complex{Real(1), Real(0)} - w * s);
      z[i] = z[i] - corr;
      if (abs(corr) / (1 + abs(z[i])) < tol) done[i] = true;
      else all = false;
    }
    if (all) break;
  }

  const Real eps = pow(Real(10), -98);
  std::vector<IsolatedRoot> out(d);
  for (int i = 0; i < d; ++i) {
    Complex v, dv;
    Real mag, dmag;
    horner(c, z[i], v, dv, mag, dmag);
    Real err = 4 * Real(d + 1) * eps * mag;
    Real denom = abs(dv) - 4 * Real(d + 1) * eps * dmag;
    if (denom <= 0) throw InvariantViolation("root isolation: derivative too small to certify");
    out[i].center = z[i];
    out[i].radius = Real(d) * (abs(v) + err) / denom;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius)
        throw InvariantViolation("root isolation: inclusion discs overlap");
  return out;
}

}  // namespace shascope
