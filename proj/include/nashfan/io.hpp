#ifndef NASHFAN_IO_HPP
#define NASHFAN_IO_HPP

// JSON encodings. Integers are emitted as JSON numbers when they fit in a
// signed 64-bit value and as decimal strings otherwise; readers accept both.

#include <json.hpp>

#include <string>
#include <vector>

#include "nashfan/nash.hpp"

namespace nashfan::io {

using json = nlohmann::json;

inline json to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "not an integer: " + j.dump());
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

inline json to_json(const LatticeVector& v) { return json::array({to_json(v.x), to_json(v.y)}); }

inline LatticeVector vector_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected [x, y], got " + j.dump());
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

inline json to_json(const std::vector<LatticeVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

inline json to_json(const Cone2& c) { return {{"rays", json::array({to_json(c.ray1()), to_json(c.ray2())})}}; }

inline Cone2 cone_from_json(const json& j) {
  const auto& rays = j.at("rays");
  if (!rays.is_array() || rays.size() != 2) throw Error(ErrorCode::ParseError, "a cone needs exactly two rays");
  return Cone2(vector_from_json(rays[0]), vector_from_json(rays[1]));
}

inline json to_json(const Fan2& f) {
  json cones = json::array();
  std::vector<Cone2> sorted = f.cones;
  std::sort(sorted.begin(), sorted.end(),
            [](const Cone2& a, const Cone2& b) { return AngularLess{}(a.ray1(), b.ray1()); });
  for (const auto& c : sorted) cones.push_back(to_json(c));
  return {{"support", to_json(f.support)}, {"cones", cones}};
}

inline Fan2 fan_from_json(const json& j) {
  Fan2 f{{}, cone_from_json(j.at("support"))};
  for (const auto& c : j.at("cones")) f.cones.push_back(cone_from_json(c));
  return f;
}

inline json to_json(const AffineSemigroup& sg) {
  return {{"dual_cone", to_json(sg.dual_cone())}, {"generators", to_json(sg.generators())}};
}

inline SemigroupPtr semigroup_from_json(const json& j) {
  auto sg = make_semigroup(cone_from_json(j.at("dual_cone")));
  if (j.contains("generators")) {
    std::vector<LatticeVector> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vector_from_json(g));
    if (gens != sg->generators()) throw Error(ErrorCode::ParseError, "generators are not the Hilbert basis of dual_cone");
  }
  if (*sg == *a3().semigroup) return a3().semigroup;
  return sg;
}

inline json to_json(const SemigroupPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exp", to_json(e)}, {"num", to_json(c.get_num())}, {"den", to_json(c.get_den())}});
  return {{"terms", terms}};
}

inline SemigroupPolynomial polynomial_from_json(const json& j, SemigroupPtr ctx) {
  SemigroupPolynomial f(std::move(ctx));
  for (const auto& t : j.at("terms")) {
    Integer den = integer_from_json(t.at("den"));
    if (sgn(den) == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Rational c(integer_from_json(t.at("num")), den);
    c.canonicalize();
    f.add_term(vector_from_json(t.at("exp")), c);
  }
  return f;
}

inline json to_json(const MatrixOrdering& ord) { return {{"rows", to_json(ord.rows())}}; }

inline MatrixOrdering ordering_from_json(const json& j, SemigroupPtr ctx) {
  std::vector<LatticeVector> rows;
  for (const auto& r : j.at("rows")) rows.push_back(vector_from_json(r));
  return MatrixOrdering(std::move(ctx), std::move(rows));
}

inline json to_json(const MarkedBasis& b) {
  json elems = json::array();
  for (const auto& e : b.elements()) elems.push_back({{"poly", to_json(e.poly)}, {"mark", to_json(e.mark)}});
  return {{"semigroup", to_json(*b.context())}, {"ordering", to_json(b.ordering())}, {"elements", elems}};
}

inline MarkedBasis basis_from_json(const json& j) {
  SemigroupPtr ctx = semigroup_from_json(j.at("semigroup"));
  MatrixOrdering ord = ordering_from_json(j.at("ordering"), ctx);
  std::vector<MarkedElement> elems;
  for (const auto& e : j.at("elements"))
    elems.push_back({polynomial_from_json(e.at("poly"), ctx), vector_from_json(e.at("mark"))});
  return MarkedBasis(std::move(ord), std::move(elems));
}

inline json to_json(const GroebnerCone& gc) {
  json j = to_json(gc.cone);
  j["multiplicity"] = to_json(multiplicity(gc.cone));
  j["hilbert_basis"] = to_json(hilbert_basis(gc.cone));
  j["basis"] = to_json(gc.basis);
  return j;
}

/// Fan of Gröbner cones in angular order, each cone carrying its basis.
inline json to_json(const std::vector<GroebnerCone>& cones, const Cone2& support) {
  json arr = json::array();
  for (const auto& gc : cones) arr.push_back(to_json(gc));
  return {{"support", to_json(support)}, {"cones", arr}};
}

inline json to_json(const NashFanResult& r) {
  json j = to_json(r.cones, r.fan.support);
  j["is_singular"] = r.is_singular;
  j["max_multiplicity"] = to_json(r.max_multiplicity());
  return j;
}

inline json to_json(const VerificationReport& rep) {
  json results = json::array();
  for (const auto& r : rep.results) {
    json claims = json::array();
    for (const auto& c : r.claims)
      claims.push_back({{"claim_id", c.claim_id}, {"statement", c.statement}, {"pass", c.pass}, {"witness", c.witness}});
    results.push_back({{"n", r.n}, {"claims", claims}});
  }
  return {{"n_max", rep.n_max}, {"all_pass", rep.all_pass()}, {"results", results}};
}

}  // namespace nashfan::io

#endif  // NASHFAN_IO_HPP
