#include <gtest/gtest.h>

#include <random>

#include "mutwb/exchange.hpp"
#include "oracles.hpp"

using namespace mutwb;

namespace {

ExchangeMatrix triangle(int m) {
  ExchangeMatrix b(3);
  b.set(0, 1, m);
  b.set(1, 2, m);
  b.set(2, 0, m);
  return b;
}

} // namespace

TEST(ExchangeMatrix, RejectsNonSkewInput) {
  EXPECT_THROW(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(ExchangeMatrix(IntMatrix{{1, 0}, {0, 0}}), DomainError);
  EXPECT_NO_THROW(ExchangeMatrix(IntMatrix{{0, 2}, {-2, 0}}));
}

TEST(ExchangeMatrix, IndexOutOfRange) {
  ExchangeMatrix b(2);
  EXPECT_THROW(mutate(b, 2), DomainError);
  EXPECT_THROW(mutate_sign_split(b, 5), DomainError);
  try {
    mutate(b, 2);
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "vertex index 3 out of range 1..2");
  }
}

TEST(Mutation, TriangleThreeGivesThreeThreeSix) {
  ExchangeMatrix mu = mutate(triangle(3), 0);
  MultiQuiver q = to_multiquiver(mu);
  EXPECT_EQ(q.arrows(1, 0), 3);
  EXPECT_EQ(q.arrows(0, 2), 3);
  EXPECT_EQ(q.arrows(2, 1), 6);
  EXPECT_EQ(q.arrow_map().size(), 3u);
  EXPECT_EQ(mutate_sign_split(triangle(3), 0), mu);
}

TEST(Mutation, ZeroMatrixStaysZero) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_EQ(mutate(ExchangeMatrix(n), k), ExchangeMatrix(n));
      EXPECT_EQ(mutate_sign_split(ExchangeMatrix(n), k), ExchangeMatrix(n));
    }
}

TEST(Mutation, PathMiddleVertexGivesCycle) {
  // 1 -> 2 -> 3 mutated at 2, worked out entry by entry:
  // b12, b21, b23, b32 flip sign; b13 = 0 + (|1|*1 + 1*|1|)/2 = 1.
  ExchangeMatrix path(3);
  path.set(0, 1, 1);
  path.set(1, 2, 1);
  ExchangeMatrix expected(IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  EXPECT_EQ(mutate(path, 1), expected);
  EXPECT_EQ(mutate_sign_split(path, 1), expected);
}

TEST(Mutation, EmptyWordAndRepeatedVertex) {
  ExchangeMatrix b = triangle(2);
  EXPECT_EQ(mutate(b, std::vector<std::size_t>{}), b);
  EXPECT_EQ(mutate(b, std::vector<std::size_t>{2, 2}), b);
}

TEST(MutationProperty, InvolutionSkewAndFormsAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    ExchangeMatrix b = oracle::random_exchange_matrix(rng, 6, 5);
    for (std::size_t k = 0; k < b.size(); ++k) {
      ExchangeMatrix m = mutate(b, k);
      ASSERT_EQ(mutate(m, k), b);
      ASSERT_EQ(mutate_sign_split(b, k), m);
      ASSERT_NO_THROW(ExchangeMatrix(m.matrix()));
    }
  }
}

TEST(MutationProperty, CommutesWithRelabeling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ExchangeMatrix b = oracle::random_exchange_matrix(rng, 5, 3);
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t k = 0; k < b.size(); ++k)
      ASSERT_EQ(relabel(mutate(b, k), perm), mutate(relabel(b, perm), perm[k]));
  }
}

TEST(MultiQuiver, RoundTrip) {
  ExchangeMatrix b = triangle(3);
  MultiQuiver q = to_multiquiver(b);
  EXPECT_EQ(q.arrows(0, 1), 3);
  EXPECT_EQ(q.arrows(1, 2), 3);
  EXPECT_EQ(q.arrows(2, 0), 3);
  EXPECT_EQ(from_multiquiver(q), b);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    ExchangeMatrix r = oracle::random_exchange_matrix(rng, 6, 4);
    ASSERT_EQ(from_multiquiver(to_multiquiver(r)), r);
  }
}

TEST(MultiQuiver, TwoCycleDiagnostic) {
  MultiQuiver q(2);
  q.set_arrows(0, 1, 1);
  q.set_arrows(1, 0, 1);
  try {
    from_multiquiver(q);
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "2-cycle at (1,2)");
  }
  MultiQuiver l(2);
  l.set_arrows(1, 1, 1);
  EXPECT_THROW(from_multiquiver(l), DomainError);
  EXPECT_THROW(q.set_arrows(0, 1, -1), DomainError);
}

TEST(MultiQuiver, RemoveTwoCycles) {
  MultiQuiver q(2);
  q.set_arrows(0, 1, 3);
  q.set_arrows(1, 0, 1);
  MultiQuiver r = remove_two_cycles(q);
  EXPECT_EQ(r.arrows(0, 1), 2);
  EXPECT_EQ(r.arrows(1, 0), 0);
  EXPECT_EQ(remove_two_cycles(r), r);

  MultiQuiver full(2);
  full.set_arrows(0, 1, 2);
  full.set_arrows(1, 0, 2);
  EXPECT_TRUE(remove_two_cycles(full).arrow_map().empty());

  MultiQuiver none = to_multiquiver(triangle(2));
  EXPECT_EQ(remove_two_cycles(none), none);

  MultiQuiver looped(1);
  looped.set_arrows(0, 0, 2);
  EXPECT_EQ(remove_two_cycles(looped), looped);
}

TEST(MultiQuiver, RemoveTwoCyclesProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> mult(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    MultiQuiver q(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j)
          q.set_arrows(i, j, mult(rng));
    MultiQuiver r = remove_two_cycles(q);
    ASSERT_EQ(remove_two_cycles(r), r);
    ASSERT_TRUE(r.two_cycles().empty());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j)
          ASSERT_EQ(r.arrows(i, j) - r.arrows(j, i), q.arrows(i, j) - q.arrows(j, i));
  }
}

TEST(MultiQuiver, MutationRecordsTwoCycles) {
  MultiQuiver q(3);
  q.set_arrows(0, 1, 2);
  q.set_arrows(1, 0, 1);
  q.set_arrows(1, 2, 1);
  QuiverMutation r = mutate(q, {1});
  ASSERT_EQ(r.cancelled_two_cycles.size(), 1u);
  EXPECT_EQ(r.cancelled_two_cycles[0], MultiQuiver::Arrow(0, 1));
  ExchangeMatrix clean(3);
  clean.set(0, 1, 1);
  clean.set(1, 2, 1);
  EXPECT_EQ(r.result, mutate(clean, 1));
}

TEST(McKay, CyclicOrderThree) {
  MultiQuiver q = mckay_cyclic(3, {1, 1, 1});
  EXPECT_EQ(q.arrow_map().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(q.arrows(i, (i + 1) % 3), 3);
  EXPECT_EQ(from_multiquiver(q), triangle(3));
}

TEST(McKay, CyclicOrderFive) {
  MultiQuiver q = mckay_cyclic(5, {1, 2, 2});
  EXPECT_EQ(q.arrow_map().size(), 10u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(q.arrows(i, (i + 1) % 5), 1);
    EXPECT_EQ(q.arrows(i, (i + 2) % 5), 2);
  }
}

TEST(McKay, DegenerateCases) {
  MultiQuiver q = mckay_cyclic(1, {0});
  EXPECT_EQ(q.size(), 1u);
  EXPECT_EQ(q.arrows(0, 0), 1);
  EXPECT_THROW(mckay_cyclic(0, {1}), DomainError);
  EXPECT_THROW(mckay_cyclic(3, {}), DomainError);
  // Negative weights are reduced mod the order.
  EXPECT_EQ(mckay_cyclic(4, {-1}), mckay_cyclic(4, {3}));
}

TEST(Isomorphism, CanonicalForm) {
  ExchangeMatrix path(3);
  path.set(0, 1, 1);
  path.set(1, 2, 1);
  ExchangeMatrix other(3);
  other.set(2, 0, 1);
  other.set(0, 1, 1);
  EXPECT_TRUE(isomorphic(path, other));
  EXPECT_FALSE(isomorphic(path, triangle(1)));
  EXPECT_THROW(canonical_form(ExchangeMatrix(9)), ResourceLimit);
}
