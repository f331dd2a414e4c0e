#include "shascope/ring.hpp"

namespace shascope {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

Fp::Fp(std::int64_t value, std::uint64_t modulus) : p(modulus) {
  if (modulus == 0) throw DomainError("Fp requires a modulus");
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  v = static_cast<std::uint64_t>(r);
}

Fp Fp::from_big(const BigInt& value, std::uint64_t modulus) {
  BigInt m = static_cast<unsigned long>(modulus);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  Fp out;
  out.p = modulus;
  out.v = r.get_ui();
  return out;
}

namespace {
std::uint64_t common_modulus(const Fp& a, const Fp& b) {
  if (a.p && b.p && a.p != b.p) throw InvariantViolation("mixed moduli in Fp arithmetic");
  return a.p ? a.p : b.p;
}
}  // namespace

Fp operator+(const Fp& a, const Fp& b) {
  Fp r;
  r.p = common_modulus(a, b);
  if (!r.p) return r;
  std::uint64_t s = a.v + b.v;
  r.v = s >= r.p ? s - r.p : s;
  return r;
}

Fp operator-(const Fp& a, const Fp& b) {
  Fp r;
  r.p = common_modulus(a, b);
  if (!r.p) return r;
  r.v = a.v >= b.v ? a.v - b.v : a.v + r.p - b.v;
  return r;
}

Fp operator-(const Fp& a) {
  Fp r = a;
  if (a.v) r.v = a.p - a.v;
  return r;
}

Fp operator*(const Fp& a, const Fp& b) {
  Fp r;
  r.p = common_modulus(a, b);
  if (!r.p) return r;
  r.v = mulmod(a.v, b.v, r.p);
  return r;
}

Fp pow(const Fp& a, std::uint64_t e) {
  Fp r = a;
  r.v = powmod(a.v, e, a.p);
  return r;
}

Fp inverse(const Fp& a) {
  if (a.v == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, a.p - 2);
}

int legendre(const Fp& a) {
  if (a.v == 0) return 0;
  return pow(a, (a.p - 1) / 2).v == 1 ? 1 : -1;
}

Fp exact_div(const Fp& a, const Fp& b) { return a * inverse(b); }

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InvariantViolation("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InvariantViolation("inexact integer division " + a.get_str() + " / " + b.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigRat exact_div(const BigRat& a, const BigRat& b) {
  if (b == 0) throw InvariantViolation("division by zero");
  return BigRat(a / b);
}

BigRat inverse(const BigRat& a) {
  if (a == 0) throw DomainError("inverse of zero");
  return BigRat(1 / a);
}

}  // namespace shascope
