#include <gtest/gtest.h>

#include "support/support.hpp"

using namespace nashfan;
using testing_support::Rng;

namespace {

const Cone2 kSigma({0, 1}, {4, -3});
const Cone2 kSigmaDual({1, 0}, {3, 4});
const Cone2 kQuadrant({1, 0}, {0, 1});

Cone2 random_cone(Rng& rng) {
  for (;;) {
    LatticeVector a(rng.uniform(-9, 9), rng.uniform(-9, 9));
    LatticeVector b(rng.uniform(-9, 9), rng.uniform(-9, 9));
    if (a.is_zero() || b.is_zero() || sgn(det(a, b)) == 0) continue;
    return Cone2(a, b);
  }
}

}  // namespace

TEST(LatticeVector, ExactArithmetic) {
  LatticeVector a(3, -4), b(-1, 7);
  EXPECT_EQ(a + b, LatticeVector(2, 3));
  EXPECT_EQ(a - b, LatticeVector(4, -11));
  EXPECT_EQ(3 * a, LatticeVector(9, -12));
  EXPECT_EQ(-a, LatticeVector(-3, 4));
  EXPECT_EQ(dot(a, b), -31);
  EXPECT_EQ(det(a, b), 17);
  Integer big("123456789012345678901234567890");
  LatticeVector huge(big, big);
  EXPECT_EQ((huge + huge).x, big * 2);
}

TEST(LatticeVector, Primitive) {
  EXPECT_EQ(primitive({6, -4}), LatticeVector(3, -2));
  EXPECT_EQ(primitive({0, -5}), LatticeVector(0, -1));
  EXPECT_TRUE(is_primitive({2, -1}));
  EXPECT_FALSE(is_primitive({2, -2}));
  EXPECT_FALSE(is_primitive({0, 0}));
}

TEST(Cone2, NormalizesRaysAndOrientation) {
  Cone2 c({0, 3}, {8, -6});
  EXPECT_TRUE(is_primitive(c.ray1()));
  EXPECT_TRUE(is_primitive(c.ray2()));
  EXPECT_GT(sgn(det(c.ray1(), c.ray2())), 0);
  EXPECT_EQ(c, kSigma);
  EXPECT_EQ(Cone2({4, -3}, {0, 1}), kSigma);
}

TEST(Cone2, RejectsDegenerateInput) {
  EXPECT_THROW(Cone2({1, 2}, {2, 4}), Error);
  EXPECT_THROW(Cone2({0, 0}, {1, 0}), Error);
  EXPECT_THROW(Cone2({1, 0}, {-1, 0}), Error);
  try {
    Cone2({1, 1}, {-2, -2});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCone);
  }
}

TEST(DualCone, Examples) {
  EXPECT_EQ(dual_cone(kSigma), kSigmaDual);
  EXPECT_EQ(dual_cone(kQuadrant), kQuadrant);
}

TEST(DualCone, InvolutionAndDefinitionOnRandomCones) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Cone2 c = random_cone(rng);
    Cone2 d = dual_cone(c);
    EXPECT_EQ(dual_cone(d), c) << c;
    // every ray of the dual pairs nonnegatively with every ray of c, and each
    // dual ray is orthogonal to one ray of c
    for (const auto& u : {d.ray1(), d.ray2()}) {
      EXPECT_GE(sgn(dot(u, c.ray1())), 0);
      EXPECT_GE(sgn(dot(u, c.ray2())), 0);
      EXPECT_TRUE(sgn(dot(u, c.ray1())) == 0 || sgn(dot(u, c.ray2())) == 0);
    }
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(kSigma, {2, -1}));
  EXPECT_TRUE(contains(kSigma, {0, 0}));
  EXPECT_FALSE(contains(kSigmaDual, {2, 3}));
  EXPECT_TRUE(contains(kSigmaDual, {3, 4}));
  EXPECT_FALSE(contains_interior(kSigmaDual, {3, 4}));
  EXPECT_TRUE(contains_interior(kSigmaDual, {1, 1}));
}

TEST(Contains, AgreesWithRawHalfPlanesAndIsAdditive) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    Cone2 c = random_cone(rng);
    std::vector<LatticeVector> inside;
    for (int k = 0; k < 40; ++k) {
      LatticeVector p(rng.uniform(-20, 20), rng.uniform(-20, 20));
      ASSERT_EQ(contains(c, p), testing_support::raw_contains(c, p));
      if (contains(c, p)) inside.push_back(p);
    }
    for (const auto& p : inside)
      for (const auto& q : inside) EXPECT_TRUE(contains(c, p + q));
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis(kSigmaDual), (std::vector<LatticeVector>{{1, 0}, {1, 1}, {3, 4}}));
  EXPECT_EQ(hilbert_basis(kQuadrant), (std::vector<LatticeVector>{{1, 0}, {0, 1}}));
  auto hb = hilbert_basis(Cone2({1, 0}, {1, 2}));
  std::sort(hb.begin(), hb.end());
  EXPECT_EQ(hb, (std::vector<LatticeVector>{{1, 0}, {1, 1}, {1, 2}}));
}

TEST(HilbertBasis, MatchesBruteForceIrreducibles) {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    Cone2 c = random_cone(rng);
    auto hb = hilbert_basis(c);
    long extent = 0;
    for (const auto& h : hb) extent = std::max({extent, std::abs(h.x.get_si()), std::abs(h.y.get_si())});
    // generous box: twice the largest element, at least the ray extents
    for (const auto& r : {c.ray1(), c.ray2()})
      extent = std::max({extent, std::abs(r.x.get_si()), std::abs(r.y.get_si())});
    auto oracle = testing_support::brute_force_hilbert(c, 2 * extent);
    std::sort(hb.begin(), hb.end());
    EXPECT_EQ(hb, oracle) << c;
  }
}

TEST(HilbertBasis, RegularIffTwoElements) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    Cone2 c = random_cone(rng);
    EXPECT_EQ(is_regular(c), hilbert_basis(c).size() == 2) << c;
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(Cone2({2, -1}, {0, 1})), 2);
  EXPECT_EQ(multiplicity(kQuadrant), 1);
  EXPECT_EQ(multiplicity(Cone2({2, -1}, {4, -1})), 2);
  EXPECT_EQ(multiplicity(kSigma), 4);
}

TEST(ConeFromInequalities, Examples) {
  std::vector<LatticeVector> one{{2, 4}};
  EXPECT_EQ(cone_from_inequalities(one, kSigma), Cone2({0, 1}, {2, -1}));
  EXPECT_EQ(cone_from_inequalities({}, kSigma), kSigma);
  std::vector<LatticeVector> redundant{{1, 0}, {0, 1}};
  EXPECT_EQ(cone_from_inequalities(redundant, kQuadrant), kQuadrant);
}

TEST(ConeFromInequalities, DuplicateAndParallelNormals) {
  std::vector<LatticeVector> normals{{2, 4}, {1, 2}, {3, 6}, {2, 4}};
  EXPECT_EQ(cone_from_inequalities(normals, kSigma), Cone2({0, 1}, {2, -1}));
}

TEST(ConeFromInequalities, DegenerateRegionThrows) {
  std::vector<LatticeVector> ray_only{{1, 2}, {-1, -2}};
  try {
    cone_from_inequalities(ray_only, kSigma);
    FAIL() << "expected NotFullDimensional";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFullDimensional);
  }
  std::vector<LatticeVector> empty{{0, -1}, {-1, 0}};
  EXPECT_THROW(cone_from_inequalities(empty, kQuadrant), Error);
}

TEST(ConeFromInequalities, AgreesWithPointwiseFeasibility) {
  Rng rng(15);
  int checked = 0;
  while (checked < 60) {
    std::vector<LatticeVector> normals;
    for (int k = 0; k < 3; ++k) normals.emplace_back(rng.uniform(-5, 5), rng.uniform(-5, 5));
    Cone2 got = kSigma;
    try {
      got = cone_from_inequalities(normals, kSigma);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    for (int k = 0; k < 60; ++k) {
      LatticeVector p(rng.uniform(-15, 15), rng.uniform(-15, 15));
      bool feasible = testing_support::raw_contains(kSigma, p);
      for (const auto& nv : normals) feasible = feasible && sgn(dot(nv, p)) >= 0;
      EXPECT_EQ(contains(got, p), feasible) << got << " at " << p;
    }
  }
}

TEST(ValidateFan, Examples) {
  EXPECT_TRUE(validate_fan({{Cone2({0, 1}, {2, -1}), Cone2({2, -1}, {4, -3})}, kSigma}));
  EXPECT_TRUE(validate_fan({{kSigma}, kSigma}));
  EXPECT_FALSE(validate_fan({{Cone2({0, 1}, {4, -3}), Cone2({2, -1}, {4, -3})}, kSigma}));
}

TEST(ValidateFan, DetectsGapsAndStrayCones) {
  EXPECT_FALSE(validate_fan({{Cone2({0, 1}, {2, -1})}, kSigma}));
  EXPECT_FALSE(validate_fan({{}, kSigma}));
  EXPECT_FALSE(validate_fan({{Cone2({0, 1}, {2, -1}), Cone2({3, -2}, {4, -3})}, kSigma}));
  EXPECT_FALSE(validate_fan({{Cone2({-1, 1}, {2, -1}), Cone2({2, -1}, {4, -3})}, kSigma}));
  EXPECT_TRUE(validate_fan({{Cone2({2, -1}, {4, -3}), Cone2({0, 1}, {1, 0}), Cone2({1, 0}, {2, -1})}, kSigma}));
}
