#pragma once

// Uniform element interface for the coefficient rings used by ExactPoly:
// BigInt, BigRat, Fp and SymPoly. Every ring type T provides, by overload,
//   is_zero(x), ring_int(like, n), exact_div(a, b), ring_str(x)
// and field types additionally provide inverse(x).

#include <cstdint>
#include <string>

#include "shascope/arith.hpp"

namespace shascope {

// Residue modulo a prime p < 2^63. A default-constructed value is the zero of
// an unspecified field and adopts the modulus of the other operand.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::int64_t value, std::uint64_t modulus);
  static Fp from_big(const BigInt& value, std::uint64_t modulus);

  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
};

Fp operator+(const Fp& a, const Fp& b);
Fp operator-(const Fp& a, const Fp& b);
Fp operator-(const Fp& a);
Fp operator*(const Fp& a, const Fp& b);
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }
Fp pow(const Fp& a, std::uint64_t e);
Fp inverse(const Fp& a);
// Legendre symbol of a mod p: -1, 0 or 1.
int legendre(const Fp& a);

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp ring_int(const Fp& like, long n) { return Fp(n, like.p); }
Fp exact_div(const Fp& a, const Fp& b);
inline std::string ring_str(const Fp& a) { return std::to_string(a.v); }

inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline BigInt ring_int(const BigInt&, long n) { return BigInt(n); }
BigInt exact_div(const BigInt& a, const BigInt& b);
inline std::string ring_str(const BigInt& a) { return a.get_str(); }

inline bool is_zero(const BigRat& a) { return sgn(a) == 0; }
inline BigRat ring_int(const BigRat&, long n) { return BigRat(n); }
BigRat exact_div(const BigRat& a, const BigRat& b);
BigRat inverse(const BigRat& a);
inline std::string ring_str(const BigRat& a) { return a.get_str(); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace shascope
