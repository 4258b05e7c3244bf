#ifndef NASHFAN_LATTICE_HPP
#define NASHFAN_LATTICE_HPP

// Exact geometry of the plane lattice Z^2: vectors, pointed rational cones,
// duals, Hilbert bases and complete fans over a cone.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nashfan/errors.hpp"

namespace nashfan {

using Integer = mpz_class;
using Rational = mpq_class;

struct LatticeVector {
  Integer x;
  Integer y;

  LatticeVector() = default;
  LatticeVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticeVector(long x_, long y_) : x(x_), y(y_) {}

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }

  LatticeVector& operator+=(const LatticeVector& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(const LatticeVector& a) { return {Integer(-a.x), Integer(-a.y)}; }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    return {Integer(k * a.x), Integer(k * a.y)};
  }
  friend LatticeVector operator*(long k, const LatticeVector& a) { return Integer(k) * a; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Context-free lexicographic order, used for canonical storage.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.x + a.y * b.y;
}

/// det of the 2x2 matrix with rows a, b.
inline Integer det(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.y - a.y * b.x;
}

inline Integer coordinate_sum(const LatticeVector& a) { return a.x + a.y; }

inline LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) return v;
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  return {Integer(v.x / g), Integer(v.y / g)};
}

inline bool is_primitive(const LatticeVector& v) { return !v.is_zero() && primitive(v) == v; }

inline std::string to_string(const LatticeVector& v) {
  return "(" + v.x.get_str() + "," + v.y.get_str() + ")";
}

/// Strongly convex, full-dimensional cone in R^2 spanned by two primitive
/// lattice rays, stored with det(ray1; ray2) > 0.
class Cone2 {
 public:
  Cone2(const LatticeVector& a, const LatticeVector& b) {
    if (a.is_zero() || b.is_zero())
      throw Error(ErrorCode::InvalidCone, "zero ray generator");
    LatticeVector pa = primitive(a), pb = primitive(b);
    Integer d = det(pa, pb);
    if (sgn(d) == 0)
      throw Error(ErrorCode::InvalidCone,
                  "rays " + to_string(a) + " and " + to_string(b) + " are linearly dependent");
    if (sgn(d) < 0) std::swap(pa, pb);
    ray1_ = std::move(pa);
    ray2_ = std::move(pb);
  }

  const LatticeVector& ray1() const { return ray1_; }
  const LatticeVector& ray2() const { return ray2_; }

  // Inward facet normals. normal1 vanishes on ray1, normal2 on ray2.
  LatticeVector normal1() const { return {Integer(-ray1_.y), ray1_.x}; }
  LatticeVector normal2() const { return {ray2_.y, Integer(-ray2_.x)}; }

  friend bool operator==(const Cone2&, const Cone2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Cone2& c) {
    return os << "cone(" << c.ray1_ << ',' << c.ray2_ << ')';
  }

 private:
  LatticeVector ray1_;
  LatticeVector ray2_;
};

inline std::string to_string(const Cone2& c) {
  return "cone(" + to_string(c.ray1()) + "," + to_string(c.ray2()) + ")";
}

inline bool contains(const Cone2& c, const LatticeVector& p) {
  return sgn(dot(p, c.normal1())) >= 0 && sgn(dot(p, c.normal2())) >= 0;
}

inline bool contains_interior(const Cone2& c, const LatticeVector& p) {
  return sgn(dot(p, c.normal1())) > 0 && sgn(dot(p, c.normal2())) > 0;
}

/// {u : u.v >= 0 for all v in c}. Involutive.
inline Cone2 dual_cone(const Cone2& c) { return Cone2(c.normal1(), c.normal2()); }

/// |det| of the primitive rays; 1 exactly for smooth cones.
inline Integer multiplicity(const Cone2& c) { return abs(det(c.ray1(), c.ray2())); }

inline bool is_regular(const Cone2& c) { return multiplicity(c) == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

namespace detail {

// All lattice points of the closed parallelogram {a*ray1 + b*ray2 : 0 <= a,b <= 1}.
inline std::vector<LatticeVector> parallelogram_points(const Cone2& c) {
  const auto& s1 = c.ray1();
  const auto& s2 = c.ray2();
  const Integer d = det(s1, s2);
  Integer xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& v : {s1, s2, s1 + s2}) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  std::vector<LatticeVector> out;
  for (Integer x = xmin; x <= xmax; ++x) {
    for (Integer y = ymin; y <= ymax; ++y) {
      LatticeVector p(x, y);
      Integer b = det(s1, p);
      Integer a = det(p, s2);
      if (sgn(a) >= 0 && sgn(b) >= 0 && a <= d && b <= d) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace detail

/// Orders vectors of a pointed cone by angle, counterclockwise from ray1.
struct AngularLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    return sgn(det(a, b)) > 0;
  }
};

/// Minimal generating set of c ∩ Z^2, in angular order from ray1 to ray2.
/// Every irreducible element lies in the fundamental parallelogram of the rays.
inline std::vector<LatticeVector> hilbert_basis(const Cone2& c) {
  auto pts = detail::parallelogram_points(c);
  std::vector<LatticeVector> basis;
  for (const auto& p : pts) {
    if (p.is_zero()) continue;
    bool reducible = false;
    for (const auto& q : pts) {
      if (q.is_zero() || q == p) continue;
      if (contains(c, p - q)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end(), AngularLess{});
  return basis;
}

/// The feasible cone {w in support : w.n >= 0 for every n in normals}.
inline Cone2 cone_from_inequalities(std::span<const LatticeVector> normals, const Cone2& support) {
  std::set<LatticeVector> unique;
  for (const auto& n : normals)
    if (!n.is_zero()) unique.insert(primitive(n));

  auto feasible = [&](const LatticeVector& w) {
    if (!contains(support, w)) return false;
    for (const auto& n : unique)
      if (sgn(dot(w, n)) < 0) return false;
    return true;
  };

  std::vector<LatticeVector> candidates{support.ray1(), support.ray2()};
  for (const auto& n : unique) {
    candidates.emplace_back(Integer(-n.y), n.x);
    candidates.emplace_back(n.y, Integer(-n.x));
  }
  std::vector<LatticeVector> live;
  for (const auto& c : candidates)
    if (feasible(c)) live.push_back(c);
  if (live.empty()) throw Error(ErrorCode::NotFullDimensional, "feasible region is the apex only");
  const auto [lo, hi] = std::minmax_element(live.begin(), live.end(), AngularLess{});
  if (sgn(det(*lo, *hi)) <= 0)
    throw Error(ErrorCode::NotFullDimensional, "feasible region is a single ray " + to_string(*lo));
  return Cone2(*lo, *hi);
}

struct Fan2 {
  std::vector<Cone2> cones;
  Cone2 support;
};

/// True iff the cones tile the support face-to-face. The cone list may come in
/// any order; it is sorted angularly before the chain is checked.
inline bool validate_fan(const Fan2& f) {
  if (f.cones.empty()) return false;
  for (const auto& c : f.cones)
    if (!contains(f.support, c.ray1()) || !contains(f.support, c.ray2())) return false;
  std::vector<Cone2> sorted = f.cones;
  std::sort(sorted.begin(), sorted.end(), [](const Cone2& a, const Cone2& b) {
    return AngularLess{}(a.ray1(), b.ray1());
  });
  if (sorted.front().ray1() != f.support.ray1()) return false;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i].ray2() != sorted[i + 1].ray1()) return false;
  return sorted.back().ray2() == f.support.ray2();
}

}  // namespace nashfan

#endif  // NASHFAN_LATTICE_HPP
