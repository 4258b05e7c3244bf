#ifndef NASHFAN_FAN_HPP
#define NASHFAN_FAN_HPP

#include <vector>

#include "nashfan/groebner.hpp"

namespace nashfan {

/// A maximal cone of a Gröbner fan together with the marked basis labelling it.
struct GroebnerCone {
  Cone2 cone;
  MarkedBasis basis;
};

/// Normals (mark - β) for every non-leading monomial β of every element.
inline std::vector<LatticeVector> cone_normals(const MarkedBasis& basis) {
  std::vector<LatticeVector> normals;
  for (const auto& e : basis.elements())
    for (const auto& [beta, c] : e.poly.terms())
      if (beta != e.mark) normals.push_back(e.mark - beta);
  return normals;
}

inline GroebnerCone cone_of_basis(const MarkedBasis& basis, const Cone2& support) {
  auto normals = cone_normals(basis);
  return {cone_from_inequalities(normals, support), basis};
}

inline GroebnerCone cone_of_basis(const MarkedBasis& basis) {
  return cone_of_basis(basis, basis.context()->support_cone());
}

/// Sum of the two primitive rays; strictly inside the cone.
inline LatticeVector interior_weight(const GroebnerCone& gc) { return gc.cone.ray1() + gc.cone.ray2(); }

inline MarkedBasis basis_at_weight(const Ideal& I, const LatticeVector& w, const MatrixOrdering& base_ord) {
  return buchberger(I, weight_refine(base_ord, w));
}

/// All maximal cones of GF(I), counterclockwise from σ.ray1 to σ.ray2.
///
/// At the current frontier ray r the ideal is completed under the ordering
/// with rows [r, σ.ray2, σ.ray1]; that matrix stands for the weight r pushed
/// infinitesimally towards σ.ray2, so its basis labels the cone starting at r.
/// The far ray of that cone becomes the next frontier.
inline std::vector<GroebnerCone> groebner_fan(const Ideal& I, const AffineSemigroup& sg) {
  if (!same_context(I.context(), std::make_shared<const AffineSemigroup>(sg)))
    throw Error(ErrorCode::ContextMismatch, "ideal does not live over this semigroup");
  const Cone2& sigma = sg.support_cone();
  const MatrixOrdering base(I.context(), {sigma.ray2(), sigma.ray1()});

  std::vector<GroebnerCone> cones;
  LatticeVector frontier = sigma.ray1();
  while (true) {
    GroebnerCone gc = cone_of_basis(basis_at_weight(I, frontier, base), sigma);
    if (gc.cone.ray1() != frontier)
      throw Error(ErrorCode::SweepStalled,
                  "cone " + to_string(gc.cone) + " does not start at frontier " + to_string(frontier));
    LatticeVector next = gc.cone.ray2();
    cones.push_back(std::move(gc));
    if (next == sigma.ray2()) break;
    frontier = std::move(next);
  }
  return cones;
}

inline Fan2 to_fan(const std::vector<GroebnerCone>& cones, const Cone2& support) {
  Fan2 f{{}, support};
  for (const auto& gc : cones) f.cones.push_back(gc.cone);
  return f;
}

}  // namespace nashfan

#endif  // NASHFAN_FAN_HPP
