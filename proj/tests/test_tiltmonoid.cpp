#include <gtest/gtest.h>

#include <deque>

#include "mutwb/dynkin.hpp"
#include "mutwb/tiltmonoid.hpp"

using namespace mutwb;

namespace {

std::shared_ptr<const CoxeterSystem> system_of(const ValuedDiagram& d) {
  return std::make_shared<const CoxeterSystem>(d);
}

TiltingState after(const TiltingState& t, const Word& w) {
  TiltingState cur = t;
  for (const auto& m : walk(t, w))
    cur = m.state;
  return cur;
}

} // namespace

TEST(Tilting, LambdaIsIdentity) {
  auto sys = system_of(affine_a2());
  TiltingState lambda(sys);
  EXPECT_EQ(lambda.length(), 0u);
  EXPECT_TRUE(lambda.element().mat.is_identity());
  EXPECT_TRUE(k0_class_matrix(lambda).is_identity());
}

TEST(Tilting, DirectionFollowsLength) {
  auto sys = system_of(affine_a2());
  CayleyTable table(*sys, 6);
  for (std::size_t u = 0; u < table.size(); ++u) {
    TiltingState t(sys, table.element(u), table.word(u));
    for (std::size_t i = 0; i < 3; ++i) {
      Mutation m = apply_generator(t, i);
      const std::size_t v = table.right(u, i);
      if (v == CayleyTable::npos) {
        ASSERT_EQ(m.direction, Direction::up);
        ASSERT_EQ(m.state.length(), t.length() + 1);
        continue;
      }
      ASSERT_EQ(m.state.element(), table.element(v));
      ASSERT_EQ(m.state.reduced_word(), table.word(v));
      ASSERT_EQ(m.direction == Direction::up, table.length(v) > table.length(u));
    }
  }
}

TEST(Tilting, MutationIsInvolution) {
  auto sys = system_of(affine_a2());
  CayleyTable table(*sys, 5);
  for (std::size_t u = 0; u < table.size(); ++u) {
    TiltingState t(sys, table.element(u), table.word(u));
    for (std::size_t i = 0; i < 3; ++i) {
      Mutation once = apply_generator(t, i);
      Mutation twice = apply_generator(once.state, i);
      ASSERT_EQ(twice.state, t);
      ASSERT_NE(once.direction, twice.direction);
    }
  }
}

TEST(Tilting, WordToStateMatchesWalk) {
  auto sys = system_of(affine_a2());
  CayleyTable table(*sys, 6);
  const Word w{0, 1, 2, 2, 1, 0, 1, 2};
  EXPECT_EQ(word_to_state(table, sys, w), after(TiltingState(sys), w));
  EXPECT_THROW(word_to_state(table, sys, {0, 1, 2, 0, 1, 2, 0}), DepthExceeded);
}

TEST(Tilting, K0Generators) {
  for (const auto& [name, d] : generalized_extended_dynkin_diagrams(5)) {
    auto sys = system_of(d);
    TiltingState lambda(sys);
    for (std::size_t i = 0; i < d.size(); ++i) {
      IntMatrix m = k0_class_matrix(apply_generator(lambda, i).state);
      for (std::size_t j = 0; j < d.size(); ++j) {
        const Integer expected = (i == j ? 1 : 0) + sys->k()(i, j);
        ASSERT_EQ(m(j, i), expected) << name;
        for (std::size_t l = 0; l < d.size(); ++l)
          if (l != i)
            ASSERT_EQ(m(j, l), j == l ? 1 : 0) << name;
      }
    }
  }
}

TEST(Tilting, K0Composite) {
  auto sys = system_of(affine_a2());
  TiltingState lambda(sys);
  const Word a{0, 1}, b{2, 0, 1};
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  EXPECT_EQ(k0_class_matrix(after(lambda, ab)),
            k0_class_matrix(after(lambda, a)) * k0_class_matrix(after(lambda, b)));
}

TEST(Hasse, AffineA1TwoRays) {
  CoxeterSystem sys(affine_a1());
  HasseQuiver q = hasse_quiver(sys, 8);
  ASSERT_EQ(q.nodes.size(), 17u);
  ASSERT_EQ(q.arrows.size(), 16u);
  EXPECT_EQ(q.out_degree(0), 2u);
  EXPECT_EQ(q.in_degree(0), 0u);
  for (std::size_t u = 1; u < q.nodes.size(); ++u) {
    EXPECT_EQ(q.in_degree(u), 1u);
    const bool boundary = q.nodes[u].length() == 8;
    EXPECT_EQ(q.out_degree(u), boundary ? 0u : 1u);
    EXPECT_EQ(q.dangling[u], boundary ? 1u : 0u);
  }
  // Labels alternate along each ray.
  for (const auto& a : q.arrows)
    for (const auto& b : q.arrows)
      if (b.from == a.to)
        EXPECT_NE(a.label, b.label);
}

TEST(Hasse, AffineA2Structure) {
  CoxeterSystem sys(affine_a2());
  HasseQuiver q = hasse_quiver(sys, 6);
  EXPECT_EQ(q.nodes.size(), 64u);
  std::size_t interior = 0;
  for (std::size_t u = 0; u < q.nodes.size(); ++u) {
    const std::size_t deg = q.in_degree(u) + q.out_degree(u) + q.dangling[u];
    EXPECT_EQ(deg, 3u);
    if (q.nodes[u].length() < 6) {
      EXPECT_EQ(q.dangling[u], 0u);
      ++interior;
    }
    EXPECT_EQ(q.nodes[u].reduced_word(),
              descent_normal_form(sys, q.nodes[u].element()));
  }
  EXPECT_EQ(interior, 46u);
  for (const auto& a : q.arrows)
    EXPECT_EQ(q.nodes[a.to].length(), q.nodes[a.from].length() + 1);
}
