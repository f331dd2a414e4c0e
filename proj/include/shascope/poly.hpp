#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shascope/errors.hpp"
#include "shascope/ring.hpp"
#include "shascope/sympoly.hpp"

namespace shascope {

enum class RingTag { Integer, Rational, Symbolic, PrimeField };

template <class T> constexpr RingTag ring_tag();
template <> constexpr RingTag ring_tag<BigInt>() { return RingTag::Integer; }
template <> constexpr RingTag ring_tag<BigRat>() { return RingTag::Rational; }
template <> constexpr RingTag ring_tag<SymPoly>() { return RingTag::Symbolic; }
template <> constexpr RingTag ring_tag<Fp>() { return RingTag::PrimeField; }

// Dense univariate polynomial in X, coefficients stored low degree first.
template <class T>
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static ExactPoly constant(const T& v) { return ExactPoly(std::vector<T>{v}); }
  static ExactPoly monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = v;
    return ExactPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& leading() const {
    if (c_.empty()) throw InvariantViolation("leading coefficient of the zero polynomial");
    return c_.back();
  }
  RingTag tag() const { return ring_tag<T>(); }

  template <class U = T>
  U eval(const U& x) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  ExactPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * ring_int(c_[i], static_cast<long>(i));
    return ExactPoly(std::move(d));
  }

  ExactPoly& operator+=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ExactPoly& operator-=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator-(const ExactPoly& a) {
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return ExactPoly(std::move(c));
  }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (shascope::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ExactPoly(std::move(c));
  }
  friend ExactPoly operator*(const ExactPoly& a, const T& s) {
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
    return ExactPoly(std::move(c));
  }
  ExactPoly& operator*=(const ExactPoly& o) { return *this = *this * o; }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

  // Divides every coefficient exactly by s; inexact division is an invariant violation.
  ExactPoly divexact(const T& s) const {
    std::vector<T> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = exact_div(c_[i], s);
    return ExactPoly(std::move(c));
  }

  std::string str(const std::string& var = "X") const;

 private:
  void trim() {
    while (!c_.empty() && shascope::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

// Euclidean division a = q*b + r. Every leading-coefficient quotient must be exact in T.
template <class T>
std::pair<ExactPoly<T>, ExactPoly<T>> divmod(const ExactPoly<T>& a, const ExactPoly<T>& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {ExactPoly<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1));
  const T& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    T t = exact_div(r[k], lb);
    for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b.coeffs()[i];
    q[k - db] = t;
  }
  r.resize(static_cast<std::size_t>(db));
  return {ExactPoly<T>(std::move(q)), ExactPoly<T>(std::move(r))};
}

// Quotient a/b, required to be exact.
template <class T>
ExactPoly<T> exact_quotient(const ExactPoly<T>& a, const ExactPoly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("nonzero remainder in an exact polynomial division");
  return q;
}

template <class T>
ExactPoly<T> poly_mod(const ExactPoly<T>& a, const ExactPoly<T>& b) {
  return divmod(a, b).second;
}

template <class U, class T, class F>
ExactPoly<U> map_coeffs(const ExactPoly<T>& p, F&& f) {
  std::vector<U> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(f(x));
  return ExactPoly<U>(std::move(c));
}

inline ExactPoly<BigRat> to_rational(const ExactPoly<BigInt>& p) {
  return map_coeffs<BigRat>(p, [](const BigInt& x) { return BigRat(x); });
}

inline ExactPoly<Fp> reduce_mod(const ExactPoly<BigInt>& p, std::uint64_t q) {
  return map_coeffs<Fp>(p, [q](const BigInt& x) { return Fp::from_big(x, q); });
}

// Scales to the monic associate over a field.
template <class T>
ExactPoly<T> make_monic(const ExactPoly<T>& p) {
  return p.divexact(p.leading());
}

// Monic gcd over a field.
template <class T>
ExactPoly<T> poly_gcd(ExactPoly<T> a, ExactPoly<T> b) {
  while (!b.is_zero()) {
    ExactPoly<T> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

namespace detail {
inline bool compound(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}
}  // namespace detail

template <class T>
std::string ExactPoly<T>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const T& c = c_[static_cast<std::size_t>(k)];
    if (shascope::is_zero(c)) continue;
    std::string cs = ring_str(c);
    bool neg = !detail::compound(cs) && !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (detail::compound(cs)) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else term = cs + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace shascope
