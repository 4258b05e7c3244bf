#ifndef NASHFAN_ALGEBRA_HPP
#define NASHFAN_ALGEBRA_HPP

// Elements of the semigroup algebra S = Q[σ^∨ ∩ Z^2], matrix monomial
// orderings on S, weight refinements and initial forms.

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nashfan/semigroup.hpp"

namespace nashfan {

inline bool same_context(const SemigroupPtr& a, const SemigroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Finite Q-linear combination of semigroup monomials. Terms are kept in the
/// context-free lexicographic order of their exponents; zero coefficients are
/// never stored.
class SemigroupPolynomial {
 public:
  using TermMap = std::map<LatticeVector, Rational>;

  explicit SemigroupPolynomial(SemigroupPtr ctx) : ctx_(std::move(ctx)) {}

  static SemigroupPolynomial monomial(SemigroupPtr ctx, const LatticeVector& exp,
                                      const Rational& coeff = 1) {
    SemigroupPolynomial p(std::move(ctx));
    p.add_term(exp, coeff);
    return p;
  }

  static SemigroupPolynomial constant(SemigroupPtr ctx, const Rational& c) {
    return monomial(std::move(ctx), LatticeVector(0, 0), c);
  }

  /// x^a - 1
  static SemigroupPolynomial binomial_minus_one(SemigroupPtr ctx, const LatticeVector& a) {
    SemigroupPolynomial p = monomial(ctx, a);
    p.add_term(LatticeVector(0, 0), -1);
    return p;
  }

  const SemigroupPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool has_term(const LatticeVector& exp) const { return terms_.count(exp) != 0; }

  Rational coefficient(const LatticeVector& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::vector<LatticeVector> support() const {
    std::vector<LatticeVector> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  void add_term(const LatticeVector& exp, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    if (!is_member(*ctx_, exp))
      throw Error(ErrorCode::NotInSemigroup, "exponent " + to_string(exp) + " is not in the semigroup");
    Rational c = coeff;
    c.canonicalize();  // equality on mpq is only meaningful for canonical values
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SemigroupPolynomial& operator+=(const SemigroupPolynomial& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_unchecked(e, c);
    return *this;
  }

  SemigroupPolynomial& operator-=(const SemigroupPolynomial& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_unchecked(e, -c);
    return *this;
  }

  SemigroupPolynomial& operator*=(const Rational& k) {
    if (sgn(k) == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= k;
    }
    return *this;
  }

  friend SemigroupPolynomial operator+(SemigroupPolynomial a, const SemigroupPolynomial& b) { return a += b; }
  friend SemigroupPolynomial operator-(SemigroupPolynomial a, const SemigroupPolynomial& b) { return a -= b; }
  friend SemigroupPolynomial operator*(const Rational& k, SemigroupPolynomial a) { return a *= k; }

  friend SemigroupPolynomial operator*(const SemigroupPolynomial& a, const SemigroupPolynomial& b) {
    a.check_context(b);
    SemigroupPolynomial out(a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_unchecked(ea + eb, ca * cb);
    return out;
  }

  /// this += coeff * x^shift * g, where shift is a semigroup element.
  void add_shifted(const Rational& coeff, const LatticeVector& shift, const SemigroupPolynomial& g) {
    for (const auto& [e, c] : g.terms_) add_unchecked(e + shift, coeff * c);
  }

  friend bool operator==(const SemigroupPolynomial& a, const SemigroupPolynomial& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

  void check_context(const SemigroupPolynomial& o) const {
    if (!same_context(ctx_, o.ctx_))
      throw Error(ErrorCode::ContextMismatch, "polynomials live in different semigroup algebras");
  }

 private:
  void add_unchecked(const LatticeVector& exp, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SemigroupPtr ctx_;
  TermMap terms_;
};

inline SemigroupPolynomial add(const SemigroupPolynomial& f, const SemigroupPolynomial& g) { return f + g; }
inline SemigroupPolynomial mul(const SemigroupPolynomial& f, const SemigroupPolynomial& g) { return f * g; }
inline SemigroupPolynomial scale(const Rational& c, const SemigroupPolynomial& f) { return c * f; }

inline SemigroupPolynomial power(const SemigroupPolynomial& f, unsigned k) {
  SemigroupPolynomial result = SemigroupPolynomial::constant(f.context(), 1);
  SemigroupPolynomial base = f;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k != 0) base = base * base;
  }
  return result;
}

/// Monomial ordering given by an integer matrix: exponents are compared by
/// the first row on which their dot products differ.
class MatrixOrdering {
 public:
  MatrixOrdering(SemigroupPtr ctx, std::vector<LatticeVector> rows)
      : ctx_(std::move(ctx)), rows_(std::move(rows)) {
    if (rows_.empty()) throw Error(ErrorCode::InvalidOrdering, "ordering needs at least one row");
    bool spans = false;
    for (std::size_t i = 0; i < rows_.size() && !spans; ++i)
      for (std::size_t j = i + 1; j < rows_.size() && !spans; ++j)
        spans = sgn(det(rows_[i], rows_[j])) != 0;
    if (!spans) throw Error(ErrorCode::InvalidOrdering, "rows do not span R^2");
    for (const auto& g : ctx_->generators()) {
      for (const auto& r : rows_) {
        int s = sgn(dot(g, r));
        if (s < 0)
          throw Error(ErrorCode::InvalidOrdering,
                      "generator " + to_string(g) + " would be smaller than 1");
        if (s > 0) break;
      }
    }
  }

  const SemigroupPtr& context() const { return ctx_; }
  const std::vector<LatticeVector>& rows() const { return rows_; }

  std::strong_ordering compare(const LatticeVector& a, const LatticeVector& b) const {
    if (a == b) return std::strong_ordering::equal;
    const LatticeVector d = a - b;
    for (const auto& r : rows_) {
      int s = sgn(dot(d, r));
      if (s > 0) return std::strong_ordering::greater;
      if (s < 0) return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;  // unreachable: rows span R^2
  }

  bool less(const LatticeVector& a, const LatticeVector& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MatrixOrdering& a, const MatrixOrdering& b) {
    return same_context(a.ctx_, b.ctx_) && a.rows_ == b.rows_;
  }

 private:
  SemigroupPtr ctx_;
  std::vector<LatticeVector> rows_;
};

inline std::strong_ordering compare(const MatrixOrdering& ord, const LatticeVector& a, const LatticeVector& b) {
  return ord.compare(a, b);
}

/// Largest-first comparator for ordered containers.
struct DescendingBy {
  const MatrixOrdering* ord;
  bool operator()(const LatticeVector& a, const LatticeVector& b) const { return ord->compare(a, b) > 0; }
};

inline void require_in_sigma(const AffineSemigroup& sg, const LatticeVector& w) {
  if (!contains(sg.support_cone(), w))
    throw Error(ErrorCode::WeightOutsideSigma,
                "weight " + to_string(w) + " is outside " + to_string(sg.support_cone()));
}

/// The w-weighted ordering: w decides first, ties fall through to ord.
inline MatrixOrdering weight_refine(const MatrixOrdering& ord, const LatticeVector& w) {
  require_in_sigma(*ord.context(), w);
  std::vector<LatticeVector> rows;
  rows.reserve(ord.rows().size() + 1);
  rows.push_back(w);
  rows.insert(rows.end(), ord.rows().begin(), ord.rows().end());
  return MatrixOrdering(ord.context(), std::move(rows));
}

inline LatticeVector leading_monomial(const MatrixOrdering& ord, const SemigroupPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of the zero polynomial");
  auto it = f.terms().begin();
  const LatticeVector* best = &it->first;
  for (++it; it != f.terms().end(); ++it)
    if (ord.compare(it->first, *best) > 0) best = &it->first;
  return *best;
}

inline Rational leading_coefficient(const MatrixOrdering& ord, const SemigroupPolynomial& f) {
  return f.coefficient(leading_monomial(ord, f));
}

/// Sum of the terms of f of maximal w-weight. in_w(0) = 0.
inline SemigroupPolynomial initial_form(const LatticeVector& w, const SemigroupPolynomial& f) {
  require_in_sigma(*f.context(), w);
  SemigroupPolynomial out(f.context());
  if (f.is_zero()) return out;
  Integer best;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Integer v = dot(w, e);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  for (const auto& [e, c] : f.terms())
    if (dot(w, e) == best) out.add_term(e, c);
  return out;
}

// ---- text rendering in the u, v variables of S ⊂ Q[u, v] ----

inline std::string monomial_text(const LatticeVector& e) {
  if (e.is_zero()) return "1";
  std::string s;
  auto var = [&s](const char* name, const Integer& k) {
    if (sgn(k) == 0) return;
    s += name;
    if (k != 1) s += "^" + k.get_str();
  };
  var("u", e.x);
  var("v", e.y);
  return s;
}

/// Renders f with terms in descending order under ord; the term with exponent
/// `mark` (if any) is wrapped in underscores.
inline std::string to_text(const SemigroupPolynomial& f, const MatrixOrdering& ord,
                           const LatticeVector* mark = nullptr) {
  if (f.is_zero()) return "0";
  std::map<LatticeVector, Rational, DescendingBy> sorted(DescendingBy{&ord});
  for (const auto& [e, c] : f.terms()) sorted.emplace(e, c);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_text(e);
    std::string coeff;
    if (e.is_zero()) {
      mono = mag.get_str();
    } else if (mag != 1) {
      coeff = mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    }
    if (mark && e == *mark) mono = "_" + mono + "_";
    os << coeff << mono;
  }
  return os.str();
}

}  // namespace nashfan

#endif  // NASHFAN_ALGEBRA_HPP
