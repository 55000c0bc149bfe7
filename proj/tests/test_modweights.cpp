#include <gtest/gtest.h>

#include "corpus.hpp"
#include "kmw/modweights.hpp"

using namespace kmw;
using corpus::hw;

namespace {

std::set<Offset> upto(std::int64_t n) {
  std::set<Offset> s;
  for (std::int64_t k = 0; k <= n; ++k) s.insert(Offset{k});
  return s;
}

// Finite type, lambda dominant integral: mu = lambda - c is a weight iff its
// dominant conjugate lies below lambda. Computed by repeatedly reflecting in
// any node where the pairing is negative.
bool dominant_conjugate_below(const HighestWeight& lambda, const CartanMatrix& g, Offset c) {
  SignedOffset d = c;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Rational p = pairing(lambda, g, d, i);
      if (sgn(p) < 0) {
        d[i] += p.get_num().get_si();
        moved = true;
      }
    }
    if (!moved) return d.is_nonnegative();
  }
}

std::set<Offset> full_cone(std::size_t n, std::int64_t H) {
  std::set<Offset> s;
  for_each_offset(n, H, nullptr, [&](const Offset& c) { s.insert(c); });
  return s;
}

}  // namespace

TEST(ModuleWeights, Integrable) {
  EXPECT_EQ(wt_integrable(hw({"3"}), corpus::A1, {0}, 10).members, upto(3));
  EXPECT_EQ(wt_integrable(hw({"0", "0"}), corpus::A2, {0, 1}, 10).members, std::set<Offset>{Offset(2)});
  const auto trivial = wt_integrable(hw({"0", "0"}), corpus::Affine2, {0, 1}, 10);
  EXPECT_EQ(trivial.members, std::set<Offset>{Offset(2)});
  EXPECT_FALSE(trivial.contains(Offset{1, 1}));
  EXPECT_THROW(wt_integrable(hw({"1/2"}), corpus::A1, {0}, 4), NotDominantIntegral);
}

TEST(ModuleWeights, SliceExamples) {
  EXPECT_EQ(wt_simple_slice(hw({"3"}), corpus::A1, 10).members, upto(3));
  EXPECT_EQ(wt_simple_slice(hw({"-3/2"}), corpus::A1, 10).members, upto(10));
  EXPECT_EQ(wt_simple_slice(hw({"-2"}), corpus::A1, 7).members, upto(7));
  EXPECT_EQ(wt_simple_slice(hw({"1", "1"}), corpus::A2, 10).members,
            (std::set<Offset>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}));
}

TEST(ModuleWeights, FiniteTypeDominantConjugateOracle) {
  for (const auto& c : corpus::cases()) {
    if (!is_finite_type(c.g)) continue;
    for (const auto& q : c.lambdas) {
      const auto lambda = hw(q);
      if (integrability_set(lambda).size() != c.g.size()) continue;
      std::set<Offset> expect;
      for_each_offset(c.g.size(), 12, nullptr, [&](const Offset& x) {
        if (dominant_conjugate_below(lambda, c.g, x)) expect.insert(x);
      });
      EXPECT_EQ(wt_simple_slice(lambda, c.g, 12).members, expect) << corpus::describe(c, q);
    }
  }
}

TEST(ModuleWeights, LeviSlicesAlongTheOtherNode) {
  // I_lambda = {0, 1}: one sl3-module per power of alpha_2 below lambda.
  const auto lambda = hw({"2", "1", "-1/2"});
  const auto ws = wt_simple_slice(lambda, corpus::A3, 8);
  for (std::int64_t k = 0; k <= 8; ++k) EXPECT_TRUE(ws.contains(Offset{0, 0, k}));
  std::size_t top = 0;
  for (const auto& c : ws.members)
    if (c[2] == 0) ++top;
  EXPECT_EQ(top, 12u);  // distinct weights of the 15-dimensional sl3-module (2,1)
}

TEST(ModuleWeights, OrbitMethod) {
  EXPECT_EQ(wt_simple_orbit(hw({"3"}), corpus::A1, 10).members, upto(3));
  EXPECT_THROW(wt_simple_orbit(hw({"0", "0"}), corpus::Affine2, 4), InfiniteStabilizer);
  try {
    wt_simple_orbit(hw({"0", "0"}), corpus::Affine2, 4);
  } catch (const InfiniteStabilizer& e) {
    EXPECT_NE(std::string(e.what()).find("finite stabilizer"), std::string::npos);
  }
}

TEST(ModuleWeights, HullGenerators) {
  auto m = hull_generators(hw({"3"}), corpus::A1, {0}, 2);
  EXPECT_EQ(m.vertices, (std::set<Offset>{{0}, {3}}));
  EXPECT_TRUE(m.rays.empty());
  auto v = hull_generators(hw({"-3/2"}), corpus::A1, {}, 4);
  EXPECT_EQ(v.vertices, std::set<Offset>{{0}});
  EXPECT_EQ(v.rays, std::set<SignedOffset>{{1}});  // the weights lambda - t alpha
}

TEST(ModuleWeights, HullMembership) {
  auto m = hull_generators(hw({"3"}), corpus::A1, {0}, 2);
  EXPECT_EQ(hull_contains(m, Offset{0}), HullMembership::Member);
  EXPECT_EQ(hull_contains(m, Offset{1}), HullMembership::Member);
  for (std::size_t L : {1u, 2u, 8u})
    EXPECT_EQ(hull_contains(hull_generators(hw({"3"}), corpus::A1, {0}, L), Offset{4}), HullMembership::NotWithinDepth);
  EXPECT_EQ(wt_simple_hull(hw({"3"}), corpus::A1, 10, 2).members, upto(3));
  EXPECT_FALSE(wt_simple_hull(hw({"1", "1"}), corpus::A2, 6).contains(Offset{2, 0}));
}

TEST(ModuleWeights, MethodsAgreeOnCorpus) {
  for (const auto& c : corpus::cases())
    for (const auto& q : c.lambdas) {
      const auto lambda = hw(q);
      const auto slice = wt_simple_slice(lambda, c.g, 8);
      EXPECT_EQ(wt_simple_hull(lambda, c.g, 8).members, slice.members) << corpus::describe(c, q);
      if (stabilizer_is_finite(lambda, c.g, integrability_set(lambda))) {
        EXPECT_EQ(wt_simple_orbit(lambda, c.g, 8).members, slice.members) << corpus::describe(c, q);
      }
    }
}

TEST(ModuleWeights, ParabolicVerma) {
  for (const auto& c : corpus::cases())
    for (const auto& q : c.lambdas) {
      const auto lambda = hw(q);
      EXPECT_EQ(wt_parabolic_verma(lambda, c.g, integrability_set(lambda), 6).members,
                wt_simple_slice(lambda, c.g, 6).members);
      EXPECT_EQ(wt_parabolic_verma(lambda, c.g, {}, 6).members, full_cone(c.g.size(), 6));
    }
  const auto lambda = hw({"1", "1"});
  const auto none = wt_parabolic_verma(lambda, corpus::A2, {}, 4).members;
  const auto mid = wt_parabolic_verma(lambda, corpus::A2, {0}, 4).members;
  const auto all = wt_parabolic_verma(lambda, corpus::A2, {0, 1}, 4).members;
  EXPECT_TRUE(std::includes(none.begin(), none.end(), mid.begin(), mid.end()));
  EXPECT_TRUE(std::includes(mid.begin(), mid.end(), all.begin(), all.end()));
  EXPECT_LT(all.size(), mid.size());
  EXPECT_LT(mid.size(), none.size());
  EXPECT_EQ(mid, wt_parabolic_verma_induced(lambda, corpus::A2, {0}, 4));
}

TEST(ModuleWeights, SlicesStaySupportedOffTheLevi) {
  // Every weight lambda - c with c restricted to I \ I_lambda equal to b lies
  // in the slice over b, and is J-integrable there.
  const auto lambda = hw({"1", "0", "-1/2"});
  const auto ws = wt_simple_slice(lambda, corpus::AffineLeg, 8);
  for (const auto& c : ws.members) {
    Offset b{0, 0, c[2]};
    EXPECT_TRUE(ws.contains(b));
  }
}
