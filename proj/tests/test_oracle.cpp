#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "kmw/modweights.hpp"
#include "kmw/oracle.hpp"
#include "kmw/roots.hpp"

using namespace kmw;
using corpus::hw;

namespace {

Integer factorial(long k) {
  Integer r = 1;
  for (long j = 2; j <= k; ++j) r *= j;
  return r;
}

// Number of ways to write c as an unordered sum of the given roots.
std::size_t partitions(const std::vector<SignedOffset>& roots, std::size_t from, SignedOffset c) {
  if (c.is_zero()) return 1;
  std::size_t total = 0;
  for (std::size_t k = from; k < roots.size(); ++k) {
    auto rest = c - roots[k];
    if (rest.is_nonnegative()) total += partitions(roots, k, rest);
  }
  return total;
}

}  // namespace

TEST(Oracle, GramNormalisationAndSlTwo) {
  EXPECT_EQ(gram_entry(hw({"5/3", "2"}), corpus::A2, {}, {}), 1);
  for (long n : {0L, 1L, 3L, 7L}) {
    const auto lambda = hw({std::to_string(n)});
    EXPECT_EQ(gram_entry(lambda, corpus::A1, {0}, {0}), n);
    for (long k = 1; k <= 6; ++k) {
      Integer expect = factorial(k);
      for (long j = 0; j < k; ++j) expect *= (n - j);
      EXPECT_EQ(gram_entry(lambda, corpus::A1, LoweringWord(k, 0), LoweringWord(k, 0)), Rational(expect));
    }
  }
  EXPECT_EQ(gram_entry(hw({"3"}), corpus::A1, {0, 0, 0, 0}, {0, 0, 0, 0}), 0);
  EXPECT_EQ(gram_entry(hw({"-1/2"}), corpus::A1, {0, 0}, {0, 0}), Rational(3, 2));  // 2 * (-1/2)(-3/2)
}

TEST(Oracle, GramIsSymmetric) {
  std::mt19937 rng(4);
  for (const auto& c : corpus::cases()) {
    ShapovalovForm form(hw(c.lambdas.front()), c.g);
    for (int t = 0; t < 20; ++t) {
      Offset off(c.g.size());
      for (std::size_t i = 0; i < off.size(); ++i) off[i] = rng() % 3;
      auto words = words_of(off);
      auto& u = words[rng() % words.size()];
      auto& v = words[rng() % words.size()];
      EXPECT_EQ(form.entry(u, v), form.entry(v, u)) << c.name;
    }
  }
  EXPECT_THROW(gram_entry(hw({"1", "1"}), corpus::A2, {0}, {1}), InputError);
}

TEST(Oracle, WordsOfAnOffset) {
  EXPECT_EQ(words_of(Offset{2, 1}).size(), 3u);
  EXPECT_EQ(word_count(Offset{2, 2, 1}), 30);
  EXPECT_EQ(words_of(Offset{2, 2, 1}).size(), 30u);
  for (const auto& w : words_of(Offset{1, 2})) EXPECT_EQ(word_offset(2, w), (Offset{1, 2}));
}

TEST(Oracle, Multiplicities) {
  EXPECT_EQ(simple_multiplicity(hw({"2", "-1/3"}), corpus::A2, Offset{0, 0}), 1u);
  EXPECT_EQ(simple_multiplicity(hw({"3"}), corpus::A1, Offset{4}), 0u);
  EXPECT_EQ(simple_multiplicity(hw({"3"}), corpus::A1, Offset{3}), 1u);
  EXPECT_EQ(simple_multiplicity(hw({"1", "1"}), corpus::A2, Offset{1, 1}), 2u);
  EXPECT_EQ(simple_multiplicity(hw({"1", "1"}), corpus::A2, Offset{2, 0}), 0u);
  // B2 adjoint (highest root (1,2) pairs to (0,2)): zero weight has multiplicity 2
  EXPECT_EQ(simple_multiplicity(hw({"0", "2"}), corpus::B2, Offset{1, 2}), 2u);
  // affine basic module: the delta weight space is 1-dimensional
  EXPECT_EQ(simple_multiplicity(hw({"1", "0"}), corpus::Affine2, Offset{1, 1}), 1u);
}

TEST(Oracle, GenericVermaMultiplicityIsKostantCount) {
  struct Item {
    CartanMatrix g;
    std::vector<std::string> q;
    std::vector<SignedOffset> roots;
  };
  const std::vector<Item> items{
      {corpus::A2, {"-1/2", "-1/3"}, {{1, 0}, {0, 1}, {1, 1}}},
      {corpus::B2, {"-1/2", "-2/3"}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}},
      {corpus::G2, {"-1/2", "-1/5"}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}},
  };
  for (const auto& it : items) {
    ShapovalovForm form(hw(it.q), it.g);
    for_each_offset(2, 6, nullptr, [&](const Offset& c) {
      EXPECT_EQ(simple_multiplicity(form, c), partitions(it.roots, 0, c)) << c.str();
    });
  }
}

TEST(Oracle, MultiplicityIsInvariantUnderIntegrableReflections) {
  for (const auto& c : corpus::cases()) {
    if (!is_finite_type(c.g)) continue;
    for (const auto& q : c.lambdas) {
      const auto lambda = hw(q);
      ShapovalovForm form(lambda, c.g);
      for_each_offset(c.g.size(), 4, nullptr, [&](const Offset& x) {
        for (auto i : integrability_set(lambda)) {
          auto y = reflect_weight(lambda, c.g, i, x);
          if (!y || y->height() > 5) continue;
          EXPECT_EQ(simple_multiplicity(form, x), simple_multiplicity(form, *y)) << corpus::describe(c, q);
        }
      });
    }
  }
}

TEST(Oracle, WeightSets) {
  EXPECT_EQ(oracle_weight_set(hw({"3"}), corpus::A1, 6).members, (std::set<Offset>{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(oracle_weight_set(hw({"-3/2"}), corpus::A1, 6).size(), 7u);
  EXPECT_EQ(oracle_weight_set(hw({"1", "0"}), corpus::Affine2, 4).members,
            wt_simple_slice(hw({"1", "0"}), corpus::Affine2, 4).members);
}

TEST(Oracle, Budget) {
  const CartanMatrix A4{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  EXPECT_THROW(simple_multiplicity(hw({"1", "0", "0", "0"}), A4, Offset{1, 0, 0, 0}), BudgetExceeded);
  EXPECT_THROW(simple_multiplicity(hw({"1"}), corpus::A1, Offset{7}), BudgetExceeded);
  OracleBudget small{3, 6, 5};
  EXPECT_THROW(simple_multiplicity(hw({"1", "1"}), corpus::A2, Offset{3, 3}, small), BudgetExceeded);
}

TEST(Oracle, AdvisoryForNonSymmetrizable) {
  EXPECT_FALSE(oracle_is_advisory(corpus::G2));
  EXPECT_TRUE(oracle_is_advisory(CartanMatrix{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}));
}
