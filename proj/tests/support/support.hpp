#ifndef NASHFAN_TEST_SUPPORT_HPP
#define NASHFAN_TEST_SUPPORT_HPP

// Random generators and independent brute-force oracles shared by the tests.
// Oracles deliberately avoid the library's own algorithms: they scan boxes,
// test membership with raw dot products and do their own linear algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "nashfan/nashfan.hpp"

namespace testing_support {

using namespace nashfan;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return eng_; }

  /// Nonnegative combination of the generators with coefficients <= k.
  LatticeVector member(const AffineSemigroup& sg, long k) {
    LatticeVector a(0, 0);
    for (const auto& g : sg.generators()) a = a + uniform(0, k) * g;
    return a;
  }

  /// a·ray1 + b·ray2 with a, b in [1, k]: strictly interior.
  LatticeVector interior(const Cone2& c, long k) { return uniform(1, k) * c.ray1() + uniform(1, k) * c.ray2(); }

  /// a·ray1 + b·ray2 with a, b in [0, k], not both zero.
  LatticeVector in_cone(const Cone2& c, long k) {
    long a = uniform(0, k), b = uniform(0, k);
    if (a == 0 && b == 0) a = 1;
    return a * c.ray1() + b * c.ray2();
  }

  Rational coefficient() {
    long num = uniform(-5, 5);
    if (num == 0) num = 1;
    return Rational(num, uniform(1, 3));
  }

  SemigroupPolynomial polynomial(const SemigroupPtr& sg, int terms, long k) {
    SemigroupPolynomial f(sg);
    for (int i = 0; i < terms; ++i) f.add_term(member(*sg, k), coefficient());
    return f;
  }

  SemigroupPolynomial nonzero_polynomial(const SemigroupPtr& sg, int terms, long k) {
    for (;;) {
      auto f = polynomial(sg, terms, k);
      if (!f.is_zero()) return f;
    }
  }

  /// An ordering whose first row is inside σ; the second row is arbitrary but
  /// independent. Occasionally the first row sits on a boundary ray of σ.
  MatrixOrdering ordering(const SemigroupPtr& sg) {
    const Cone2& sigma = sg->support_cone();
    if (uniform(0, 9) == 0) {
      bool first = coin();
      return MatrixOrdering(sg, {first ? sigma.ray1() : sigma.ray2(), first ? sigma.ray2() : sigma.ray1()});
    }
    LatticeVector w1 = interior(sigma, 6);
    for (;;) {
      LatticeVector w2(uniform(-7, 7), uniform(-7, 7));
      if (sgn(det(w1, w2)) != 0) return MatrixOrdering(sg, {w1, w2});
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng_);
  }

 private:
  std::mt19937_64 eng_;
};

/// Half-plane test written out directly: p·n >= 0 for the inward normals of c.
inline bool raw_contains(const Cone2& c, const LatticeVector& p) {
  const LatticeVector n1(-c.ray1().y, c.ray1().x), n2(c.ray2().y, -c.ray2().x);
  return sgn(p.x * n1.x + p.y * n1.y) >= 0 && sgn(p.x * n2.x + p.y * n2.y) >= 0;
}

/// Lattice points of c in the box [-r, r]^2.
inline std::vector<LatticeVector> box_points(const Cone2& c, long r) {
  std::vector<LatticeVector> out;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      if (raw_contains(c, {x, y})) out.emplace_back(x, y);
  return out;
}

/// Irreducible nonzero lattice points of c within the box [-r, r]^2.
inline std::vector<LatticeVector> brute_force_hilbert(const Cone2& c, long r) {
  auto pts = box_points(c, r);
  std::set<LatticeVector> all(pts.begin(), pts.end());
  std::vector<LatticeVector> out;
  for (const auto& p : pts) {
    if (p.is_zero()) continue;
    bool reducible = false;
    for (const auto& q : pts) {
      if (q.is_zero() || q == p) continue;
      LatticeVector rest = p - q;
      if (!rest.is_zero() && raw_contains(c, rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimal common multiples by scanning every point with coordinate sum <= bound
/// (and |coordinates| <= bound) and keeping the divisibility-minimal ones.
inline std::vector<LatticeVector> brute_force_mcm(const Cone2& dual, const LatticeVector& a, const LatticeVector& b,
                                                  long bound) {
  std::vector<LatticeVector> common;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (x + y > bound) continue;
      LatticeVector p(x, y);
      if (raw_contains(dual, p - a) && raw_contains(dual, p - b)) common.push_back(p);
    }
  std::vector<LatticeVector> out;
  for (const auto& p : common) {
    bool minimal = true;
    for (const auto& q : common)
      if (q != p && raw_contains(dual, p - q)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank of a set of sparse rational row vectors, by Gaussian elimination.
inline std::size_t rank(std::vector<std::map<LatticeVector, Rational>> rows) {
  std::map<LatticeVector, std::map<LatticeVector, Rational>> pivots;  // pivot column -> normalized row
  std::size_t r = 0;
  for (auto& row : rows) {
    for (;;) {
      while (!row.empty() && sgn(row.begin()->second) == 0) row.erase(row.begin());
      if (row.empty()) break;
      auto [col, c] = *row.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        std::map<LatticeVector, Rational> normed;
        for (const auto& [k, v] : row)
          if (sgn(v) != 0) normed[k] = v / c;
        pivots.emplace(col, std::move(normed));
        ++r;
        break;
      }
      for (const auto& [k, v] : it->second) {
        row[k] -= c * v;
        if (sgn(row[k]) == 0) row.erase(k);
      }
    }
  }
  return r;
}

/// dim S/I estimated from the truncation {weight <= bound}: the codimension of
/// span{x^m g : g a generator, every term of x^m g of weight <= bound} inside
/// the monomials of weight <= bound. Equals dim S/I once bound is large.
inline std::size_t truncated_codimension(const Ideal& I, const LatticeVector& weight, long bound) {
  const AffineSemigroup& sg = *I.context();
  auto monomials = enumerate_below(sg, weight, bound);
  std::vector<std::map<LatticeVector, Rational>> rows;
  for (const auto& g : I.generators()) {
    Integer top = dot(weight, g.terms().begin()->first);
    for (const auto& [e, c] : g.terms()) top = std::max(top, dot(weight, e));
    for (const auto& m : monomials) {
      if (dot(weight, m) + top > bound) continue;
      std::map<LatticeVector, Rational> row;
      for (const auto& [e, c] : g.terms()) row[e + m] = c;
      rows.push_back(std::move(row));
    }
  }
  return monomials.size() - rank(std::move(rows));
}

/// Weakly right of the polygonal line p -> path -> s -> s + t(3,4), the line
/// continuing along the x-axis to the right of p. Exact rational interpolation.
inline bool right_of_polyline(const PnFamily& fam, const LatticeVector& b) {
  if (sgn(b.y) < 0) return false;
  const auto path = fam.path();
  const Rational y = b.y;
  Rational boundary_x;
  if (b.y >= fam.s.y) {
    boundary_x = Rational(fam.s.x) + (y - Rational(fam.s.y)) * Rational(3, 4);
  } else {
    bool found = false;
    for (std::size_t i = 0; i + 1 < path.size() && !found; ++i) {
      const auto& lo = path[i];
      const auto& hi = path[i + 1];
      if (b.y >= lo.y && b.y <= hi.y && hi.y > lo.y) {
        boundary_x = Rational(lo.x) + Rational(hi.x - lo.x) * (y - Rational(lo.y)) / Rational(hi.y - lo.y);
        found = true;
      }
    }
    if (!found) return false;
  }
  return Rational(b.x) >= boundary_x;
}

inline SemigroupPolynomial poly(const SemigroupPtr& sg, std::initializer_list<std::pair<LatticeVector, long>> terms) {
  SemigroupPolynomial f(sg);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

inline SemigroupPolynomial a3_poly(std::initializer_list<std::pair<LatticeVector, long>> terms) {
  return poly(a3().semigroup, terms);
}

/// The four elements of the reduced basis of J_1, written out by hand.
inline std::vector<MarkedElement> a3_j1_expected() {
  return {
      {a3_poly({{{2, 0}, 1}, {{1, 0}, -2}, {{0, 0}, 1}}), {2, 0}},
      {a3_poly({{{2, 1}, 1}, {{1, 0}, -1}, {{1, 1}, -1}, {{0, 0}, 1}}), {2, 1}},
      {a3_poly({{{2, 2}, 1}, {{1, 1}, -2}, {{0, 0}, 1}}), {2, 2}},
      {a3_poly({{{3, 4}, 1}, {{1, 0}, 1}, {{1, 1}, -4}, {{0, 0}, 2}}), {3, 4}},
  };
}

}  // namespace testing_support

#endif  // NASHFAN_TEST_SUPPORT_HPP
