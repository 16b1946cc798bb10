#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tightcycle/permutation.hpp"

using namespace tightcycle;

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), error);
  EXPECT_THROW(Permutation(std::vector<int>{0, 3, 1}), error);
  EXPECT_THROW(Permutation(std::vector<int>(7, 0)), error);
}

TEST(Permutation, ComposeWithInverseIsIdentity) {
  for (int r = 1; r <= 5; ++r)
    for (int k = 0; k < factorial(r); ++k) {
      auto p = Permutation::from_rank(r, k);
      EXPECT_TRUE((p * p.inverse()).is_identity());
      EXPECT_TRUE((p.inverse() * p).is_identity());
      EXPECT_EQ(p.rank(), k);
    }
}

TEST(Permutation, CompositionMatchesOracle) {
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      auto p = Permutation::from_rank(4, a), q = Permutation::from_rank(4, b);
      EXPECT_EQ((p * q).images(), oracle::compose(p.images(), q.images()));
    }
}

TEST(Permutation, CycMovesLastEntryToFront) {
  std::vector<int> x{10, 11, 12, 13};
  EXPECT_EQ(Permutation::cyc(4).act(x), (std::vector<int>{13, 10, 11, 12}));
  EXPECT_EQ(to_cycle_string(Permutation::cyc(4)), "(1 2 3 4)");
}

TEST(Permutation, ActionComposes) {
  std::vector<int> x{5, 7, 9, 2};
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      auto p = Permutation::from_rank(4, a), q = Permutation::from_rank(4, b);
      EXPECT_EQ(p.act(q.act(x)), (p * q).act(x));
      EXPECT_EQ(p.act(x), oracle::act(p.images(), x));
    }
}

TEST(Permutation, ActionMatchesInverseIndexing) {
  // pi(x)_i = x_{pi^-1(i)}
  std::vector<int> x{4, 8, 15, 16, 23};
  for (int k = 0; k < 120; ++k) {
    auto p = Permutation::from_rank(5, k);
    auto y = p.act(x);
    auto pi = p.inverse();
    for (int i = 0; i < 5; ++i) EXPECT_EQ(y[i], x[pi[i]]);
  }
}

TEST(Permutation, PowAndOrder) {
  auto c = Permutation::cyc(4);
  EXPECT_EQ(c.order(), 4);
  EXPECT_TRUE(c.pow(4).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(c.pow(2).cycle_type(), (std::vector<int>{2, 2}));
  EXPECT_EQ(to_cycle_string(c.pow(2)), "(1 3)(2 4)");
}

TEST(Permutation, ParseRoundTrip) {
  for (int r = 2; r <= 5; ++r)
    for (int k = 0; k < factorial(r); ++k) {
      auto p = Permutation::from_rank(r, k);
      EXPECT_EQ(parse_permutation(to_cycle_string(p), r), p);
    }
  EXPECT_EQ(parse_permutation("cyc^3", 4), Permutation::cyc(4).inverse());
  EXPECT_EQ(parse_permutation("id", 3), Permutation::identity(3));
  EXPECT_EQ(parse_permutation("(1,2)(3,4)", 4).images(), oracle::from_cycles(4, {{1, 2}, {3, 4}}));
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(parse_permutation("(1 2", 4), error);
  EXPECT_THROW(parse_permutation("(1 5)", 4), error);
  EXPECT_THROW(parse_permutation("(1 1)", 4), error);
  EXPECT_THROW(parse_permutation("cyc^", 4), error);
  EXPECT_THROW(parse_permutation("(a b)", 4), error);
  EXPECT_THROW(parse_permutation("()", 7), error);
}

TEST(Permutation, SignAndCycleType) {
  EXPECT_EQ(Permutation::cyc(4).sign(), -1);
  EXPECT_EQ(Permutation::cyc(3).sign(), 1);
  EXPECT_EQ(parse_permutation("(1 2)(3 4 5)", 5).cycle_type(), (std::vector<int>{3, 2}));
  EXPECT_EQ(parse_permutation("(1 2)(3 4 5)", 5).order(), 6);
}
