#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shascope/arith.hpp"

namespace shascope {

// Element of Z[A, B, L]: a sparse table of exponent triples to integers.
// L stands for the auxiliary parameter lambda of Phi_m(X, lambda).
class SymPoly {
 public:
  enum Var : unsigned { kA = 0, kB = 1, kL = 2 };
  struct Exps {
    unsigned a = 0, b = 0, l = 0;
  };

  SymPoly() = default;
  SymPoly(long c) : SymPoly(BigInt(c)) {}
  explicit SymPoly(const BigInt& c);
  static SymPoly var(Var v, unsigned power = 1);
  static SymPoly monomial(const BigInt& c, Exps e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_value() const;  // requires is_constant()
  std::size_t term_count() const { return terms_.size(); }
  std::vector<std::pair<Exps, BigInt>> terms() const;

  // Ring homomorphism Z[A,B,L] -> Q.
  BigRat evaluate(const BigRat& a, const BigRat& b, const BigRat& l = 0) const;
  // Substitutes numeric A and B, keeping L symbolic.
  SymPoly specialize_ab(const BigInt& a, const BigInt& b) const;

  // Exact division by a nonzero integer constant or by an integer-valued SymPoly constant.
  SymPoly divexact(const BigInt& d) const;

  std::string str() const;

  friend SymPoly operator+(const SymPoly& x, const SymPoly& y);
  friend SymPoly operator-(const SymPoly& x, const SymPoly& y);
  friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
  friend SymPoly operator-(const SymPoly& x);
  SymPoly& operator+=(const SymPoly& y) { return *this = *this + y; }
  SymPoly& operator-=(const SymPoly& y) { return *this = *this - y; }
  SymPoly& operator*=(const SymPoly& y) { return *this = *this * y; }
  friend bool operator==(const SymPoly& x, const SymPoly& y) { return x.terms_ == y.terms_; }

 private:
  using Key = std::uint64_t;
  static Key pack(Exps e);
  static Exps unpack(Key k);
  static std::vector<std::pair<Key, BigInt>> merge(const std::vector<std::pair<Key, BigInt>>& x,
                                                   const std::vector<std::pair<Key, BigInt>>& y,
                                                   bool negate_y);

  std::vector<std::pair<Key, BigInt>> terms_;  // ascending keys, nonzero coefficients
};

inline bool is_zero(const SymPoly& a) { return a.is_zero(); }
inline SymPoly ring_int(const SymPoly&, long n) { return SymPoly(n); }
SymPoly exact_div(const SymPoly& a, const SymPoly& b);
inline std::string ring_str(const SymPoly& a) { return a.str(); }

}  // namespace shascope
