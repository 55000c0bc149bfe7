#include <gtest/gtest.h>

#include "corpus.hpp"
#include "kmw/roots.hpp"

using namespace kmw;

namespace {

std::set<SignedOffset> vecs(std::initializer_list<SignedOffset> v) { return std::set<SignedOffset>(v); }

// Symmetric form (alpha, alpha) for a symmetric GCM.
std::int64_t norm(const CartanMatrix& g, const SignedOffset& c) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += c[i] * g.row_dot(i, c);
  return s;
}

}  // namespace

TEST(Roots, ClassifyVector) {
  EXPECT_EQ(classify_vector(corpus::A2, {1, 1}), RootClass::PositiveReal);
  EXPECT_EQ(classify_vector(corpus::A2, {2, 1}), RootClass::NotARoot);
  EXPECT_EQ(classify_vector(corpus::Affine2, {1, 1}), RootClass::PositiveImaginary);
  EXPECT_EQ(classify_vector(corpus::Affine2, {3, 2}), RootClass::PositiveReal);
  EXPECT_EQ(classify_vector(corpus::Affine2, {3, 1}), RootClass::NotARoot);
  EXPECT_EQ(classify_vector(corpus::A3, {1, 0, 1}), RootClass::NotARoot);  // disconnected support
}

TEST(Roots, FiniteTypeRootSystems) {
  EXPECT_EQ(positive_real_up_to(corpus::A2, 5), vecs({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(positive_real_up_to(corpus::B2, 10), vecs({{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(positive_real_up_to(corpus::G2, 10),
            vecs({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(positive_roots_finite(corpus::A3).size(), 6u);
  for (const auto& g : {corpus::A1, corpus::A2, corpus::A3, corpus::B2, corpus::G2})
    EXPECT_TRUE(positive_imaginary_up_to(g, 8).empty());
}

TEST(Roots, AffineRankTwo) {
  EXPECT_EQ(positive_real_up_to(corpus::Affine2, 3), vecs({{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
  EXPECT_EQ(positive_imaginary_up_to(corpus::Affine2, 6), vecs({{1, 1}, {2, 2}, {3, 3}}));
  std::set<SignedOffset> real;
  for (std::int64_t k = 0; 2 * k + 1 <= 11; ++k) real.insert({k + 1, k}), real.insert({k, k + 1});
  EXPECT_EQ(positive_real_up_to(corpus::Affine2, 11), real);
}

TEST(Roots, HyperbolicRootsByNorm) {
  // Hyperbolic type: the positive imaginary roots are exactly the nonzero
  // nonnegative vectors of norm <= 0, and real roots have norm 2.
  const std::int64_t H = 10;
  std::set<SignedOffset> imag;
  for_each_offset(2, H, nullptr, [&](const Offset& c) {
    if (!c.is_zero() && norm(corpus::Hyperbolic, c) <= 0) imag.insert(c);
  });
  EXPECT_EQ(positive_imaginary_up_to(corpus::Hyperbolic, H), imag);
  EXPECT_EQ(positive_imaginary_up_to(corpus::Hyperbolic, 3), vecs({{1, 1}, {1, 2}, {2, 1}}));
  for (const auto& r : positive_real_up_to(corpus::Hyperbolic, H)) EXPECT_EQ(norm(corpus::Hyperbolic, r), 2);
}

TEST(Roots, RealRootsAreClosedUnderReflection) {
  for (const auto& c : corpus::cases()) {
    const auto real = positive_real_up_to(c.g, 8);
    for (const auto& r : real) {
      EXPECT_EQ(classify_vector(c.g, r), RootClass::PositiveReal) << c.name << " " << r.str();
      for (std::size_t i = 0; i < c.g.size(); ++i) {
        auto s = r;
        s[i] -= c.g.row_dot(i, r);
        if (s.is_positive() && s.height() <= 8) {
          EXPECT_TRUE(real.count(s)) << c.name;
        }
      }
    }
    for (const auto& r : positive_imaginary_up_to(c.g, 8)) {
      EXPECT_EQ(classify_vector(c.g, r), RootClass::PositiveImaginary);
      EXPECT_FALSE(real.count(r));
    }
  }
}
