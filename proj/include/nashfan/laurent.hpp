#ifndef NASHFAN_LAURENT_HPP
#define NASHFAN_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "nashfan/lattice.hpp"

namespace nashfan {

/// Element of Q[λ, λ^-1], keyed by the exponent of λ.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Integer, Rational>;

  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(const Integer& e, const Rational& c = 1) {
    LaurentPolynomial p;
    p.add_term(e, c);
    return p;
  }

  /// (λ - 1)^k
  static LaurentPolynomial lambda_minus_one_power(unsigned k) {
    LaurentPolynomial base = monomial(1) - monomial(0);
    LaurentPolynomial out = monomial(0);
    for (unsigned i = 0; i < k; ++i) out = out * base;
    return out;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Integer& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Integer& e, const Rational& c) {
    if (sgn(c) == 0) return;
    Rational k = c;
    k.canonicalize();
    auto [it, inserted] = terms_.try_emplace(e, k);
    if (!inserted) {
      it->second += k;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  /// λ^k · this
  LaurentPolynomial shifted(const Integer& k) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) s += "-";
      Rational mag = abs(c);
      if (sgn(e) == 0) {
        s += mag.get_str();
        continue;
      }
      if (mag != 1) s += mag.get_str() + "*";
      s += e == 1 ? std::string("L") : "L^" + e.get_str();
    }
    return s;
  }

 private:
  TermMap terms_;
};

/// Quotient by (λ - 1) when it divides exactly (synthetic division), else nullopt.
inline std::optional<LaurentPolynomial> divide_by_lambda_minus_one(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  // f = Σ a_e λ^e. Quotient coefficients from the top: b_{e-1} = a_e + b_e.
  LaurentPolynomial q;
  Rational carry = 0;
  const Integer low = f.terms().begin()->first;
  const Integer high = f.terms().rbegin()->first;
  for (Integer e = high; e > low; --e) {
    carry += f.coefficient(e);
    q.add_term(e - 1, carry);
  }
  carry += f.coefficient(low);
  if (sgn(carry) != 0) return std::nullopt;
  return q;
}

/// (λ - 1)^k | f in Q[λ^±].
inline bool divisible_by_lambda_minus_one_power(const LaurentPolynomial& f, unsigned k) {
  LaurentPolynomial cur = f;
  for (unsigned i = 0; i < k; ++i) {
    auto q = divide_by_lambda_minus_one(cur);
    if (!q) return false;
    cur = std::move(*q);
  }
  return true;
}

}  // namespace nashfan

#endif  // NASHFAN_LAURENT_HPP
