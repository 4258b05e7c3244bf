#ifndef NASHFAN_GROEBNER_HPP
#define NASHFAN_GROEBNER_HPP

// Division, Buchberger completion and reduced marked Gröbner bases in S.

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <tuple>
#include <span>
#include <vector>

#include "nashfan/algebra.hpp"

namespace nashfan {

class Ideal {
 public:
  explicit Ideal(std::vector<SemigroupPolynomial> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs at least one generator");
    for (const auto& g : generators_) {
      if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "ideal generators must be nonzero");
      g.check_context(generators_.front());
    }
  }

  const std::vector<SemigroupPolynomial>& generators() const { return generators_; }
  const SemigroupPtr& context() const { return generators_.front().context(); }

 private:
  std::vector<SemigroupPolynomial> generators_;
};

struct MarkedElement {
  SemigroupPolynomial poly;
  LatticeVector mark;

  friend bool operator==(const MarkedElement&, const MarkedElement&) = default;
};

/// A reduced Gröbner basis with its leading monomials marked. Elements are
/// stored sorted lexicographically by mark; equality ignores the ordering
/// that produced the basis, since the marked basis is what labels a cone.
class MarkedBasis {
 public:
  MarkedBasis(MatrixOrdering ordering, std::vector<MarkedElement> elements)
      : ordering_(std::move(ordering)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const MarkedElement& a, const MarkedElement& b) { return a.mark < b.mark; });
    validate();
  }

  const MatrixOrdering& ordering() const { return ordering_; }
  const SemigroupPtr& context() const { return ordering_.context(); }
  const std::vector<MarkedElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<LatticeVector> marks() const {
    std::vector<LatticeVector> out;
    for (const auto& e : elements_) out.push_back(e.mark);
    return out;
  }

  const MarkedElement* find(const LatticeVector& mark) const {
    for (const auto& e : elements_)
      if (e.mark == mark) return &e;
    return nullptr;
  }

  friend bool operator==(const MarkedBasis& a, const MarkedBasis& b) { return a.elements_ == b.elements_; }

 private:
  void validate() const {
    const auto& sg = *context();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto& e = elements_[i];
      if (e.poly.is_zero() || !same_context(e.poly.context(), context()))
        throw Error(ErrorCode::InvalidArgument, "marked element is zero or from another algebra");
      if (leading_monomial(ordering_, e.poly) != e.mark || e.poly.coefficient(e.mark) != 1)
        throw Error(ErrorCode::InvalidArgument, "element marked " + to_string(e.mark) + " is not monic there");
      if (i > 0 && elements_[i - 1].mark == e.mark)
        throw Error(ErrorCode::InvalidArgument, "duplicate mark " + to_string(e.mark));
      for (std::size_t j = 0; j < elements_.size(); ++j) {
        if (i == j) continue;
        for (const auto& [exp, c] : e.poly.terms())
          if (divides(sg, elements_[j].mark, exp))
            throw Error(ErrorCode::InvalidArgument,
                        "basis is not reduced: " + to_string(elements_[j].mark) + " divides " + to_string(exp));
      }
    }
  }

  MatrixOrdering ordering_;
  std::vector<MarkedElement> elements_;
};

namespace detail {

struct Reducer {
  const SemigroupPolynomial* poly;  // monic, leading monomial == mark
  LatticeVector mark;
};

/// Full division of f by the reducers. The ≼-largest reducible monomial is
/// always eliminated first, using the reducer with the ≼-smallest mark that
/// divides it; irreducible monomials pass to the remainder.
inline SemigroupPolynomial reduce(const SemigroupPolynomial& f, std::vector<Reducer> reducers,
                                  const MatrixOrdering& ord) {
  const AffineSemigroup& sg = *ord.context();
  std::sort(reducers.begin(), reducers.end(),
            [&](const Reducer& a, const Reducer& b) { return ord.less(a.mark, b.mark); });
  std::map<LatticeVector, Rational, DescendingBy> work(DescendingBy{&ord});
  for (const auto& [e, c] : f.terms()) work.emplace(e, c);
  SemigroupPolynomial remainder(f.context());

  while (!work.empty()) {
    auto top = work.begin();
    const Reducer* by = nullptr;
    for (const auto& r : reducers) {
      if (divides(sg, r.mark, top->first)) {
        by = &r;
        break;
      }
    }
    if (!by) {
      remainder.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    const Rational c = top->second;
    const LatticeVector shift = top->first - by->mark;
    work.erase(top);
    for (const auto& [e, gc] : by->poly->terms()) {
      if (e == by->mark) continue;
      Rational delta = -c * gc;
      auto [it, inserted] = work.try_emplace(e + shift, delta);
      if (!inserted) {
        it->second += delta;
        if (sgn(it->second) == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

inline SemigroupPolynomial make_monic(SemigroupPolynomial f, const MatrixOrdering& ord) {
  Rational lc = leading_coefficient(ord, f);
  if (lc != 1) f *= Rational(1 / lc);
  return f;
}

}  // namespace detail

/// Remainder of f on division by the basis; its support avoids every mark's multiples.
inline SemigroupPolynomial normal_form(const SemigroupPolynomial& f, const MarkedBasis& basis) {
  f.check_context(SemigroupPolynomial(basis.context()));
  std::vector<detail::Reducer> reducers;
  for (const auto& e : basis.elements()) reducers.push_back({&e.poly, e.mark});
  return detail::reduce(f, std::move(reducers), basis.ordering());
}

inline bool ideal_membership(const SemigroupPolynomial& f, const MarkedBasis& basis) {
  return normal_form(f, basis).is_zero();
}

/// h ∈ (I : f), i.e. h·f ∈ I.
inline bool colon_contains(const MarkedBasis& basis, const SemigroupPolynomial& f, const SemigroupPolynomial& h) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "colon by the zero polynomial");
  return ideal_membership(h * f, basis);
}

/// One S-polynomial per minimal common multiple of the two marks.
inline std::vector<SemigroupPolynomial> s_polynomials(const MarkedElement& p1, const MarkedElement& p2,
                                                      const AffineSemigroup& sg) {
  std::vector<SemigroupPolynomial> out;
  for (const auto& m : min_common_multiples(sg, p1.mark, p2.mark)) {
    SemigroupPolynomial s(p1.poly.context());
    s.add_shifted(1, m - p1.mark, p1.poly);
    s.add_shifted(-1, m - p2.mark, p2.poly);
    out.push_back(std::move(s));
  }
  return out;
}

inline constexpr std::size_t kDefaultReductionCap = 1'000'000;

/// Reduced marked Gröbner basis of I under ord, by Buchberger completion with
/// the normal pair-selection strategy followed by inter-reduction.
inline MarkedBasis buchberger(const Ideal& I, const MatrixOrdering& ord,
                              std::size_t reduction_cap = kDefaultReductionCap) {
  if (!same_context(I.context(), ord.context()))
    throw Error(ErrorCode::ContextMismatch, "ideal and ordering live in different algebras");
  const AffineSemigroup& sg = *ord.context();

  std::deque<MarkedElement> basis;  // stable addresses for reducers
  std::vector<detail::Reducer> reducers;

  struct Pair {
    LatticeVector lcm;
    std::size_t i, j;
  };
  auto pair_after = [&ord](const Pair& a, const Pair& b) {
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_after)> pairs(pair_after);

  auto insert = [&](SemigroupPolynomial r) {
    r = detail::make_monic(std::move(r), ord);
    LatticeVector mark = leading_monomial(ord, r);
    const std::size_t k = basis.size();
    basis.push_back({std::move(r), mark});
    reducers.push_back({&basis.back().poly, mark});
    for (std::size_t i = 0; i < k; ++i)
      for (auto& m : min_common_multiples(sg, basis[i].mark, mark)) pairs.push({std::move(m), i, k});
  };

  // Smallest leading monomial first keeps early reducers short.
  std::vector<const SemigroupPolynomial*> inputs;
  for (const auto& g : I.generators()) inputs.push_back(&g);
  std::stable_sort(inputs.begin(), inputs.end(), [&ord](const SemigroupPolynomial* a, const SemigroupPolynomial* b) {
    return ord.less(leading_monomial(ord, *a), leading_monomial(ord, *b));
  });
  for (const auto* g : inputs) {
    SemigroupPolynomial r = detail::reduce(*g, reducers, ord);
    if (!r.is_zero()) insert(std::move(r));
  }

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    Pair p = pairs.top();
    pairs.pop();
    if (++reductions > reduction_cap)
      throw Error(ErrorCode::PairQueueExhausted, "more than " + std::to_string(reduction_cap) + " S-pair reductions");
    const auto& a = basis[p.i];
    const auto& b = basis[p.j];
    SemigroupPolynomial s(a.poly.context());
    s.add_shifted(1, p.lcm - a.mark, a.poly);
    s.add_shifted(-1, p.lcm - b.mark, b.poly);
    SemigroupPolynomial r = detail::reduce(s, reducers, ord);
    if (!r.is_zero()) insert(std::move(r));
  }

  // Minimalize: drop elements whose mark is a proper multiple of another mark.
  std::vector<const MarkedElement*> minimal;
  for (const auto& e : basis) {
    bool redundant = std::any_of(basis.begin(), basis.end(), [&](const MarkedElement& o) {
      return &o != &e && divides(sg, o.mark, e.mark);
    });
    if (!redundant) minimal.push_back(&e);
  }

  std::vector<MarkedElement> reduced;
  for (const auto* e : minimal) {
    std::vector<detail::Reducer> others;
    for (const auto* o : minimal)
      if (o != e) others.push_back({&o->poly, o->mark});
    SemigroupPolynomial tail = e->poly;
    tail.add_term(e->mark, -1);
    SemigroupPolynomial g = detail::reduce(tail, std::move(others), ord);
    g.add_term(e->mark, 1);
    reduced.push_back({std::move(g), e->mark});
  }
  return MarkedBasis(ord, std::move(reduced));
}

/// σ_Z minus the monomial ideal generated by the marks, found by a breadth
/// first walk from 0 along the semigroup generators.
inline std::vector<LatticeVector> standard_monomials(const MarkedBasis& basis, std::size_t cap) {
  const AffineSemigroup& sg = *basis.context();
  auto in_ideal = [&](const LatticeVector& a) {
    return std::any_of(basis.elements().begin(), basis.elements().end(),
                       [&](const MarkedElement& e) { return divides(sg, e.mark, a); });
  };
  std::set<LatticeVector> seen;
  std::deque<LatticeVector> frontier;
  LatticeVector zero(0, 0);
  if (!in_ideal(zero)) {
    seen.insert(zero);
    frontier.push_back(zero);
  }
  while (!frontier.empty()) {
    LatticeVector a = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : sg.generators()) {
      LatticeVector b = a + g;
      if (seen.count(b) || in_ideal(b)) continue;
      if (seen.size() >= cap)
        throw Error(ErrorCode::QuotientNotFinite,
                    "more than " + std::to_string(cap) + " standard monomials");
      seen.insert(b);
      frontier.push_back(std::move(b));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace nashfan

#endif  // NASHFAN_GROEBNER_HPP
