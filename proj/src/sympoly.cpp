#include "shascope/sympoly.hpp"

#include <algorithm>

#include "shascope/ring.hpp"

namespace shascope {

SymPoly::Key SymPoly::pack(Exps e) {
  if (e.a > 0xFFFF || e.b > 0xFFFF || e.l > 0xFFFF) throw BudgetError("symbolic exponent overflow");
  return (static_cast<Key>(e.a) << 32) | (static_cast<Key>(e.b) << 16) | e.l;
}

SymPoly::Exps SymPoly::unpack(Key k) {
  return Exps{static_cast<unsigned>(k >> 32), static_cast<unsigned>((k >> 16) & 0xFFFF),
              static_cast<unsigned>(k & 0xFFFF)};
}

SymPoly::SymPoly(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

SymPoly SymPoly::var(Var v, unsigned power) {
  Exps e;
  if (v == kA) e.a = power;
  if (v == kB) e.b = power;
  if (v == kL) e.l = power;
  return monomial(1, e);
}

SymPoly SymPoly::monomial(const BigInt& c, Exps e) {
  SymPoly r;
  if (c != 0) r.terms_.emplace_back(pack(e), c);
  return r;
}

bool SymPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

BigInt SymPoly::constant_value() const {
  if (!is_constant()) throw InvariantViolation("symbolic value is not constant: " + str());
  return terms_.empty() ? BigInt(0) : terms_[0].second;
}

std::vector<std::pair<SymPoly::Exps, BigInt>> SymPoly::terms() const {
  std::vector<std::pair<Exps, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
  return out;
}

std::vector<std::pair<SymPoly::Key, BigInt>> SymPoly::merge(const std::vector<std::pair<Key, BigInt>>& x,
                                                            const std::vector<std::pair<Key, BigInt>>& y,
                                                            bool negate_y) {
  std::vector<std::pair<Key, BigInt>> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, negate_y ? BigInt(-y[j].second) : y[j].second);
      ++j;
    } else {
      BigInt c = negate_y ? BigInt(x[i].second - y[j].second) : BigInt(x[i].second + y[j].second);
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SymPoly operator+(const SymPoly& x, const SymPoly& y) {
  SymPoly r;
  r.terms_ = SymPoly::merge(x.terms_, y.terms_, false);
  return r;
}

SymPoly operator-(const SymPoly& x, const SymPoly& y) {
  SymPoly r;
  r.terms_ = SymPoly::merge(x.terms_, y.terms_, true);
  return r;
}

SymPoly operator-(const SymPoly& x) {
  SymPoly r = x;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
  const SymPoly& s = x.terms_.size() <= y.terms_.size() ? x : y;
  const SymPoly& t = x.terms_.size() <= y.terms_.size() ? y : x;
  SymPoly r;
  if (s.terms_.empty()) return r;
  std::vector<std::pair<SymPoly::Key, BigInt>> row(t.terms_.size());
  for (const auto& [ks, cs] : s.terms_) {
    for (std::size_t i = 0; i < t.terms_.size(); ++i) {
      SymPoly::Exps e1 = SymPoly::unpack(ks), e2 = SymPoly::unpack(t.terms_[i].first);
      row[i].first = SymPoly::pack({e1.a + e2.a, e1.b + e2.b, e1.l + e2.l});
      row[i].second = cs * t.terms_[i].second;
    }
    r.terms_ = r.terms_.empty() ? row : SymPoly::merge(r.terms_, row, false);
  }
  return r;
}

BigRat SymPoly::evaluate(const BigRat& a, const BigRat& b, const BigRat& l) const {
  BigRat out = 0;
  for (const auto& [k, c] : terms_) {
    Exps e = unpack(k);
    BigRat t = c;
    for (unsigned i = 0; i < e.a; ++i) t *= a;
    for (unsigned i = 0; i < e.b; ++i) t *= b;
    for (unsigned i = 0; i < e.l; ++i) t *= l;
    out += t;
  }
  return out;
}

SymPoly SymPoly::specialize_ab(const BigInt& a, const BigInt& b) const {
  SymPoly out;
  for (const auto& [k, c] : terms_) {
    Exps e = unpack(k);
    BigInt pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), e.a);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), e.b);
    out += monomial(BigInt(c * pa * pb), Exps{0, 0, e.l});
  }
  return out;
}

SymPoly SymPoly::divexact(const BigInt& d) const {
  SymPoly r = *this;
  for (auto& t : r.terms_) t.second = exact_div(t.second, d);
  return r;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Exps e = unpack(it->first);
    BigInt c = it->second;
    bool neg = c < 0;
    BigInt mag = abs(c);
    std::string mono;
    auto add_var = [&](const char* name, unsigned p) {
      if (!p) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (p > 1) mono += "^" + std::to_string(p);
    };
    add_var("A", e.a);
    add_var("B", e.b);
    add_var("lambda", e.l);
    std::string body;
    if (mono.empty()) body = mag.get_str();
    else if (mag == 1) body = mono;
    else body = mag.get_str() + "*" + mono;
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

SymPoly exact_div(const SymPoly& a, const SymPoly& b) {
  if (!b.is_constant() || b.is_zero())
    throw InvariantViolation("symbolic division only by nonzero integer constants");
  return a.divexact(b.constant_value());
}

}  // namespace shascope
