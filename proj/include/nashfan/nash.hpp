#ifndef NASHFAN_NASH_HPP
#define NASHFAN_NASH_HPP

// Higher Nash blowups of toric surfaces through the Gröbner fan of
// J_n = <x^{a_1} - 1, ..., x^{a_s} - 1>^{n+1}, with the A3 surface z^4 = xy
// worked out in full: the mark families P_n, the standard sets D_n, the
// specialization to Q[λ^±], and a claim-by-claim verification report.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nashfan/fan.hpp"
#include "nashfan/laurent.hpp"

namespace nashfan {

struct A3Context {
  SemigroupPtr semigroup;
  MatrixOrdering ordering;
};

/// σ^∨ = cone((1,0),(3,4)) with the ordering of rows (2,-1), (1,1).
inline const A3Context& a3() {
  static const A3Context ctx = [] {
    auto sg = make_semigroup(Cone2({1, 0}, {3, 4}));
    return A3Context{sg, MatrixOrdering(sg, {{2, -1}, {1, 1}})};
  }();
  return ctx;
}

/// All products of n+1 of the binomials x^{a_i} - 1 (with repetition), expanded.
inline Ideal jn_generators(const SemigroupPtr& sg, unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const auto& gens = sg->generators();
  const std::size_t s = gens.size();
  const unsigned k = n + 1;
  std::vector<std::vector<SemigroupPolynomial>> powers(s);
  for (std::size_t i = 0; i < s; ++i) {
    powers[i].push_back(SemigroupPolynomial::constant(sg, 1));
    SemigroupPolynomial b = SemigroupPolynomial::binomial_minus_one(sg, gens[i]);
    for (unsigned e = 1; e <= k; ++e) powers[i].push_back(powers[i].back() * b);
  }
  std::vector<SemigroupPolynomial> out;
  std::vector<unsigned> exps(s, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned left) {
    if (i + 1 == s) {
      exps[i] = left;
      SemigroupPolynomial p = SemigroupPolynomial::constant(sg, 1);
      for (std::size_t j = 0; j < s; ++j) p = p * powers[j][exps[j]];
      out.push_back(std::move(p));
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[i] = e;
      walk(i + 1, left - e);
    }
  };
  walk(0, k);
  return Ideal(std::move(out));
}

// ---- the families P_n and D_n ----

struct PnFamily {
  unsigned n;
  LatticeVector p;
  std::vector<LatticeVector> q;  // q[i] = q^i
  std::vector<LatticeVector> r;  // r[j] = r^j
  LatticeVector s;

  std::vector<LatticeVector> points() const {
    std::vector<LatticeVector> out{p};
    out.insert(out.end(), q.begin(), q.end());
    out.insert(out.end(), r.begin(), r.end());
    out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// p, q^last, ..., q^0, r^0, ..., r^last, s: the polygonal line through P_n.
  std::vector<LatticeVector> path() const {
    std::vector<LatticeVector> out{p};
    out.insert(out.end(), q.rbegin(), q.rend());
    out.insert(out.end(), r.begin(), r.end());
    out.push_back(s);
    return out;
  }
};

inline PnFamily pn_family(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const LatticeVector step(1, 2);
  const LatticeVector up(0, 1);
  const LatticeVector a3_ray(3, 4);
  const long m = n;
  PnFamily f;
  f.n = n;
  LatticeVector q0;
  long q_last, r_last;
  if (n % 2 == 1) {
    const long h = (m - 1) / 2;
    f.p = LatticeVector((m + 3) / 2, 0);
    q0 = LatticeVector((m + 3) / 2, 1) + h * step;
    q_last = h;
    r_last = h;
    f.s = ((m + 1) / 2) * a3_ray;
  } else {
    f.p = LatticeVector((m + 2) / 2, 0);
    q0 = LatticeVector((m + 2) / 2, 0) + (m / 2) * step;
    q_last = (m - 2) / 2;
    r_last = m / 2;
    f.s = ((m + 2) / 2) * a3_ray;
  }
  for (long i = 0; i <= q_last; ++i) f.q.push_back(q0 - i * step);
  const LatticeVector r0 = q0 + up;
  for (long j = 0; j <= r_last; ++j) f.r.push_back(r0 + j * step);
  return f;
}

/// D_1 = {(0,0),(1,0),(1,1)}, D_n = D_{n-1} ⊔ (P_{n-1} \ P_n). Lexicographically sorted.
inline std::vector<LatticeVector> dn_set(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::set<LatticeVector> d{{0, 0}, {1, 0}, {1, 1}};
  for (unsigned k = 2; k <= n; ++k) {
    auto prev = pn_family(k - 1).points();
    auto cur = pn_family(k).points();
    for (const auto& a : prev)
      if (!std::binary_search(cur.begin(), cur.end(), a)) d.insert(a);
  }
  return {d.begin(), d.end()};
}

inline LatticeVector theta(const LatticeVector& a) { return a + LatticeVector(1, 1); }

/// (-1,1)·a
inline Integer phi_linear(const LatticeVector& a) { return a.y - a.x; }

/// The second ray of the cone of GB(J_n): (2n-2, -n+2) for odd n, (2n, -n+1) for even n.
inline LatticeVector l_n(unsigned n) {
  const long m = n;
  return n % 2 == 1 ? LatticeVector(2 * m - 2, -m + 2) : LatticeVector(2 * m, -m + 1);
}

inline Integer psi(unsigned n, const LatticeVector& a) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "psi is defined for n >= 2");
  return dot(l_n(n), a);
}

/// u^a v^b ↦ λ^{b-a}, i.e. u ↦ λ^-1, u^3v^4 ↦ λ, uv ↦ 1.
inline LaurentPolynomial phi_specialize(const SemigroupPolynomial& f) {
  if (!same_context(f.context(), a3().semigroup))
    throw Error(ErrorCode::ContextMismatch, "the specialization is defined on the A3 algebra only");
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(phi_linear(e), c);
  return out;
}

namespace detail {

/// Is target a Q-linear combination of the vectors?
inline bool in_rational_span(const std::vector<LaurentPolynomial>& vectors, LaurentPolynomial target) {
  std::map<Integer, LaurentPolynomial> echelon;  // pivot = highest exponent, coefficient 1
  auto eliminate = [&](LaurentPolynomial v) {
    while (!v.is_zero()) {
      const auto& [top, c] = *v.terms().rbegin();
      auto it = echelon.find(top);
      if (it == echelon.end()) break;
      Rational k = c;
      LaurentPolynomial scaled;
      for (const auto& [e, pc] : it->second.terms()) scaled.add_term(e, k * pc);
      v -= scaled;
    }
    return v;
  };
  for (const auto& v : vectors) {
    LaurentPolynomial r = eliminate(v);
    if (r.is_zero()) continue;
    const auto [top, c] = *r.terms().rbegin();
    LaurentPolynomial normed;
    for (const auto& [e, rc] : r.terms()) normed.add_term(e, rc / c);
    echelon.emplace(top, std::move(normed));
  }
  return eliminate(std::move(target)).is_zero();
}

}  // namespace detail

struct PhiImageCheck {
  bool generators_divisible;     // every φ(generator) ∈ <(λ-1)^{n+1}>
  bool power_in_generated_span;  // (λ-1)^{n+1} = Σ c λ^k φ(generator)
};

/// Two-sided check of φ(J_n) = <λ - 1>^{n+1}; shifts λ^k range over [-(n+1), n+1].
inline PhiImageCheck check_phi_image(unsigned n) {
  const Ideal jn = jn_generators(a3().semigroup, n);
  PhiImageCheck out{true, false};
  std::vector<LaurentPolynomial> span;
  const long bound = n + 1;
  for (const auto& g : jn.generators()) {
    LaurentPolynomial img = phi_specialize(g);
    if (!divisible_by_lambda_minus_one_power(img, n + 1)) out.generators_divisible = false;
    if (img.is_zero()) continue;
    for (long k = -bound; k <= bound; ++k) span.push_back(img.shifted(k));
  }
  out.power_in_generated_span = detail::in_rational_span(span, LaurentPolynomial::lambda_minus_one_power(n + 1));
  return out;
}

// ---- the Nash blowup fan of an arbitrary toric surface ----

struct NashFanResult {
  Fan2 fan;
  std::vector<GroebnerCone> cones;
  std::vector<Integer> multiplicities;
  bool is_singular = false;

  Integer max_multiplicity() const {
    Integer m = 0;
    for (const auto& k : multiplicities) m = std::max(m, k);
    return m;
  }
};

/// GF(J_n) for the surface of `surface_cone`, whose dual must already sit in
/// the first quadrant (no coordinate change is attempted).
inline NashFanResult nash_fan(const Cone2& surface_cone, unsigned n) {
  auto sg = std::make_shared<const AffineSemigroup>(AffineSemigroup::from_support(surface_cone));
  for (const auto& g : sg->generators())
    if (sgn(g.x) < 0 || sgn(g.y) < 0)
      throw Error(ErrorCode::DualNotNonnegative,
                  "Hilbert basis element " + to_string(g) + " of the dual cone has a negative coordinate");
  if (*sg == *a3().semigroup) sg = a3().semigroup;  // lets φ and the A3 helpers accept the result
  const Ideal jn = jn_generators(sg, n);
  NashFanResult out{Fan2{{}, sg->support_cone()}, groebner_fan(jn, *sg), {}, false};
  for (const auto& gc : out.cones) {
    out.fan.cones.push_back(gc.cone);
    out.multiplicities.push_back(multiplicity(gc.cone));
    if (out.multiplicities.back() > 1) out.is_singular = true;
  }
  return out;
}

// ---- claim-by-claim verification of the A3 computations ----

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  bool pass = false;
  std::string witness;
};

struct NResult {
  unsigned n;
  std::vector<ClaimResult> claims;
};

struct VerificationReport {
  unsigned n_max = 0;
  std::vector<NResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      for (const auto& c : r.claims)
        if (!c.pass) return false;
    return true;
  }
};

inline std::string join(const std::vector<LatticeVector>& pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + to_string(pts[i]);
  return s + "]";
}

inline MarkedBasis a3_basis(unsigned n) { return buchberger(jn_generators(a3().semigroup, n), a3().ordering); }

inline VerificationReport verify_claims(unsigned n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  const auto& ctx = a3();
  const auto& ord = ctx.ordering;
  VerificationReport report;
  report.n_max = n_max;

  std::vector<MarkedBasis> bases;
  for (unsigned n = 1; n <= n_max; ++n) bases.push_back(a3_basis(n));

  for (unsigned n = 1; n <= n_max; ++n) {
    const MarkedBasis& gb = bases[n - 1];
    const PnFamily fam = pn_family(n);
    const auto pn = fam.points();
    NResult res{n, {}};

    {
      auto marks = gb.marks();
      std::sort(marks.begin(), marks.end());
      res.claims.push_back({"a", "marks of GB(J_n) equal P_n", marks == pn,
                            "marks=" + join(marks) + " P_n=" + join(pn)});
    }
    {
      ClaimResult c{"b", "standard monomials of GB(J_n) equal D_n, of size (n+1)(n+2)/2", false, ""};
      try {
        auto std_mons = standard_monomials(gb, 100000);
        auto dn = dn_set(n);
        std::size_t expected = static_cast<std::size_t>(n + 1) * (n + 2) / 2;
        c.pass = std_mons == dn && std_mons.size() == expected;
        c.witness = "count=" + std::to_string(std_mons.size()) + " expected=" + std::to_string(expected);
        if (!c.pass) c.witness += " standard=" + join(std_mons) + " D_n=" + join(dn);
      } catch (const Error& e) {
        c.witness = e.what();
      }
      res.claims.push_back(std::move(c));
    }
    {
      ClaimResult c{"c", "cone of GB(J_n) has rays (2,-1) and l_n", false, ""};
      ClaimResult d{"d", "cone of GB(J_n) has multiplicity 2", false, ""};
      try {
        auto gc = cone_of_basis(gb);
        Cone2 expected({2, -1}, l_n(n));
        c.pass = gc.cone == expected;
        c.witness = "cone=" + to_string(gc.cone) + " expected=" + to_string(expected);
        Integer m = multiplicity(gc.cone);
        d.pass = m == 2;
        d.witness = "multiplicity=" + m.get_str();
      } catch (const Error& e) {
        c.witness = d.witness = e.what();
      }
      res.claims.push_back(std::move(c));
      res.claims.push_back(std::move(d));
    }
    if (n >= 2) {
      const PnFamily prev = pn_family(n - 1);
      ClaimResult c{"e", "", false, ""};
      LatticeVector mark, needed;
      if (n % 2 == 0) {
        c.statement = "the element marked p_n contains s_{n-1}";
        mark = fam.p;
        needed = prev.s;
      } else {
        c.statement = "the element marked q_n^{(n-1)/2} contains r_{n-1}^{(n-1)/2}";
        mark = fam.q[(n - 1) / 2];
        needed = prev.r[(n - 1) / 2];
      }
      const MarkedElement* el = gb.find(mark);
      c.pass = el && el->poly.has_term(needed);
      c.witness = el ? "mark=" + to_string(mark) + " needed=" + to_string(needed) + " g=" + to_text(el->poly, ord, &el->mark)
                     : "no element marked " + to_string(mark);
      res.claims.push_back(std::move(c));

      ClaimResult f{"f", "(uv-1)g lies in J_n for every g in GB(J_{n-1})", true, ""};
      const auto uv_minus_one = SemigroupPolynomial::binomial_minus_one(ctx.semigroup, {1, 1});
      for (const auto& e : bases[n - 2].elements()) {
        if (!colon_contains(gb, uv_minus_one, e.poly)) {
          f.pass = false;
          f.witness = "fails for g=" + to_text(e.poly, ord, &e.mark);
          break;
        }
      }
      if (f.pass) f.witness = "checked " + std::to_string(bases[n - 2].size()) + " elements";
      res.claims.push_back(std::move(f));
    }
    if (n % 2 == 0) {
      ClaimResult g{"g", "phi vanishes on every GB(J_n) element marked in P_{n-1} \\ P_n", true, ""};
      auto prev = pn_family(n - 1).points();
      std::size_t checked = 0;
      for (const auto& e : gb.elements()) {
        if (!std::binary_search(prev.begin(), prev.end(), e.mark) || std::binary_search(pn.begin(), pn.end(), e.mark))
          continue;
        ++checked;
        LaurentPolynomial img = phi_specialize(e.poly);
        if (!img.is_zero()) {
          g.pass = false;
          g.witness = "phi(" + to_text(e.poly, ord, &e.mark) + ") = " + img.to_string();
          break;
        }
      }
      if (g.pass) g.witness = "checked " + std::to_string(checked) + " elements (none exist when the marks equal P_n)";
      res.claims.push_back(std::move(g));

      // Companion of (g) that has content: any f with lm(f) in P_{n-1} \ P_n
      // has phi-support in B = {λ^-n/2, ..., λ^n/2}; GB(J_{n-1}) supplies such f.
      ClaimResult gs{"g.support", "phi(f) has support in [-n/2, n/2] for GB(J_{n-1}) elements marked in P_{n-1} \\ P_n",
                     true, ""};
      const Integer half = n / 2;
      checked = 0;
      for (const auto& e : bases[n - 2].elements()) {
        if (std::binary_search(pn.begin(), pn.end(), e.mark)) continue;
        ++checked;
        LaurentPolynomial img = phi_specialize(e.poly);
        for (const auto& [exp, coeff] : img.terms()) {
          if (abs(exp) > half) {
            gs.pass = false;
            gs.witness = "phi(" + to_text(e.poly, ord, &e.mark) + ") = " + img.to_string();
            break;
          }
        }
        if (!gs.pass) break;
      }
      if (gs.pass) gs.witness = "checked " + std::to_string(checked) + " elements";
      if (checked == 0) {
        gs.pass = false;
        gs.witness = "no element of GB(J_{n-1}) is marked in P_{n-1} \\ P_n";
      }
      res.claims.push_back(std::move(gs));
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace nashfan

#endif  // NASHFAN_NASH_HPP
