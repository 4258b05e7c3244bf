#ifndef NASHFAN_SEMIGROUP_HPP
#define NASHFAN_SEMIGROUP_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "nashfan/lattice.hpp"

namespace nashfan {

/// The saturated affine semigroup σ^∨ ∩ Z^2. Its elements are the exponents
/// of the monomials of S; divisibility in S is membership of the difference.
class AffineSemigroup {
 public:
  explicit AffineSemigroup(const Cone2& dual)
      : dual_cone_(dual), support_cone_(nashfan::dual_cone(dual)), generators_(hilbert_basis(dual)) {}

  static AffineSemigroup from_support(const Cone2& sigma) {
    return AffineSemigroup(nashfan::dual_cone(sigma));
  }

  /// σ^∨
  const Cone2& dual_cone() const { return dual_cone_; }
  /// σ, the support of every Gröbner fan over this semigroup.
  const Cone2& support_cone() const { return support_cone_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.dual_cone_ == b.dual_cone_;
  }

 private:
  Cone2 dual_cone_;
  Cone2 support_cone_;
  std::vector<LatticeVector> generators_;
};

using SemigroupPtr = std::shared_ptr<const AffineSemigroup>;

inline SemigroupPtr make_semigroup(const Cone2& dual) {
  return std::make_shared<const AffineSemigroup>(dual);
}

inline bool is_member(const AffineSemigroup& sg, const LatticeVector& a) {
  return contains(sg.dual_cone(), a);
}

/// x^b | x^a in S.
inline bool divides(const AffineSemigroup& sg, const LatticeVector& b, const LatticeVector& a) {
  return contains(sg.dual_cone(), a - b);
}

/// Divisibility-minimal elements of (a + σ_Z) ∩ (b + σ_Z), lexicographically sorted.
///
/// The intersection is {p : n1.p >= c1, n2.p >= c2} for the facet normals
/// n1, n2 of σ^∨. A point p of it is minimal iff p - g leaves the region for
/// every generator g. Taking g on either ray of σ^∨ bounds both facet slacks,
/// so the minimal elements sit in a bounded parallelogram that is scanned.
inline std::vector<LatticeVector> min_common_multiples(const AffineSemigroup& sg,
                                                       const LatticeVector& a,
                                                       const LatticeVector& b) {
  const Cone2& dual = sg.dual_cone();
  const LatticeVector n1 = dual.normal1();
  const LatticeVector n2 = dual.normal2();
  const Integer c1 = std::max(Integer(dot(n1, a)), Integer(dot(n1, b)));
  const Integer c2 = std::max(Integer(dot(n2, a)), Integer(dot(n2, b)));
  const Integer w1 = dot(n1, dual.ray2());
  const Integer w2 = dot(n2, dual.ray1());

  auto in_region = [&](const LatticeVector& p) { return dot(n1, p) >= c1 && dot(n2, p) >= c2; };

  // Corners of c1 <= n1.p <= c1 + w1, c2 <= n2.p <= c2 + w2.
  const Integer d = det(n1, n2);
  Integer xmin, xmax, ymin, ymax;
  bool first = true;
  for (const Integer& t1 : {c1, Integer(c1 + w1)}) {
    for (const Integer& t2 : {c2, Integer(c2 + w2)}) {
      Rational px(Integer(t1 * n2.y - t2 * n1.y), d);
      Rational py(Integer(t2 * n1.x - t1 * n2.x), d);
      px.canonicalize();
      py.canonicalize();
      Integer fx = floor_div(px.get_num(), px.get_den());
      Integer cx = ceil_div(px.get_num(), px.get_den());
      Integer fy = floor_div(py.get_num(), py.get_den());
      Integer cy = ceil_div(py.get_num(), py.get_den());
      if (first) {
        xmin = fx, xmax = cx, ymin = fy, ymax = cy;
        first = false;
      } else {
        xmin = std::min(xmin, fx), xmax = std::max(xmax, cx);
        ymin = std::min(ymin, fy), ymax = std::max(ymax, cy);
      }
    }
  }

  std::vector<LatticeVector> out;
  for (Integer x = xmin; x <= xmax; ++x) {
    for (Integer y = ymin; y <= ymax; ++y) {
      LatticeVector p(x, y);
      if (!in_region(p)) continue;
      bool minimal = std::none_of(sg.generators().begin(), sg.generators().end(),
                                  [&](const LatticeVector& g) { return in_region(p - g); });
      if (minimal) out.push_back(std::move(p));
    }
  }
  return out;
}

/// Members a with a.weight <= bound, sorted by weight then lexicographically.
inline std::vector<LatticeVector> enumerate_below(const AffineSemigroup& sg,
                                                  const LatticeVector& weight,
                                                  const Integer& bound) {
  const auto& e1 = sg.dual_cone().ray1();
  const auto& e2 = sg.dual_cone().ray2();
  const Integer d1 = dot(weight, e1), d2 = dot(weight, e2);
  if (sgn(d1) <= 0 || sgn(d2) <= 0)
    throw Error(ErrorCode::InvalidWeight,
                "weight " + to_string(weight) + " is not strictly positive on the rays of the dual cone");
  if (sgn(bound) < 0) return {};
  const LatticeVector far1 = ceil_div(bound, d1) * e1;
  const LatticeVector far2 = ceil_div(bound, d2) * e2;
  Integer xmin = std::min({Integer(0), far1.x, far2.x}), xmax = std::max({Integer(0), far1.x, far2.x});
  Integer ymin = std::min({Integer(0), far1.y, far2.y}), ymax = std::max({Integer(0), far1.y, far2.y});

  std::vector<std::pair<Integer, LatticeVector>> hits;
  for (Integer x = xmin; x <= xmax; ++x) {
    for (Integer y = ymin; y <= ymax; ++y) {
      LatticeVector p(x, y);
      if (!is_member(sg, p)) continue;
      Integer w = dot(p, weight);
      if (w <= bound) hits.emplace_back(std::move(w), std::move(p));
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second < r.second;
  });
  std::vector<LatticeVector> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

}  // namespace nashfan

#endif  // NASHFAN_SEMIGROUP_HPP
