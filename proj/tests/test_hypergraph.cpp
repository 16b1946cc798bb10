#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tightcycle/hypergraph.hpp"

using namespace tightcycle;

namespace {

// Windows of seq as sorted edges.
std::set<oracle::Tuple> windows(const std::vector<int>& seq, int r) {
  std::set<oracle::Tuple> out;
  for (std::size_t i = 0; i + r <= seq.size(); ++i) {
    oracle::Tuple t(seq.begin() + i, seq.begin() + i + r);
    std::sort(t.begin(), t.end());
    out.insert(t);
  }
  return out;
}

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(Hypergraph, ConstructorValidates) {
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1}}), error);
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1, 1}}), error);
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1, 4}}), error);
  EXPECT_THROW(Hypergraph(7, 8), error);
  Hypergraph g(3, 4, {{2, 1, 0}, {0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges().front(), (Edge{0, 1, 2}));
}

TEST(Hypergraph, TightCycleExamples) {
  auto k5 = tight_cycle(4, 5);
  EXPECT_EQ(k5.edge_count(), 5u);
  EXPECT_EQ(k5.vertex_count(), 5);
  auto c4 = tight_cycle(2, 4);
  EXPECT_EQ(c4.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  auto c6 = tight_cycle(3, 6);
  EXPECT_EQ(c6.edge_count(), 6u);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(vertex_degree(c6, v), 3);
  EXPECT_THROW(tight_cycle(4, 4), error);
}

TEST(Hypergraph, TightCycleIsVertexTransitive) {
  for (int r = 2; r <= 5; ++r)
    for (int ell = 2 * r - 1; ell <= 12; ++ell) {
      auto g = tight_cycle(r, ell);
      std::vector<int> seq;
      for (int i = 0; i < ell + r - 1; ++i) seq.push_back(i % ell);
      EXPECT_EQ(oracle::sorted_edges(g), windows(seq, r));
      for (int v = 0; v < ell; ++v) EXPECT_EQ(vertex_degree(g, v), r);
    }
}

TEST(Hypergraph, TwistedIdentityEqualsTightCycle) {
  for (int r = 2; r <= 4; ++r)
    for (int ell = 2 * r; ell <= 10; ++ell) EXPECT_EQ(twisted_tight_cycle(r, ell, Permutation::identity(r)), tight_cycle(r, ell));
}

TEST(Hypergraph, TwistedMatchesWindowEnumeration) {
  for (int r = 2; r <= 4; ++r)
    for (int ell = 2 * r; ell <= 9; ++ell)
      for (int k = 0; k < factorial(r); ++k) {
        auto pi = Permutation::from_rank(r, k);
        std::vector<int> seq;
        for (int i = 0; i < ell; ++i) seq.push_back(i);
        std::vector<int> head(seq.begin(), seq.begin() + r);
        auto tail = oracle::act(pi.images(), head);
        seq.insert(seq.end(), tail.begin(), tail.end());
        EXPECT_EQ(oracle::sorted_edges(twisted_tight_cycle(r, ell, pi)), windows(seq, r));
      }
  auto g = twisted_tight_cycle(3, 6, parse_permutation("(1 2)", 3));
  // 0 1 2 3 4 5 1 0 2: wrap windows {1,4,5}, {0,1,5} and a repeat of {0,1,2}
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.has_edge({0, 1, 5}));
  EXPECT_FALSE(g.has_edge({0, 4, 5}));
  EXPECT_THROW(twisted_tight_cycle(4, 7, Permutation::cyc(4)), error);
  EXPECT_TRUE(twisted_length_in_family(4, 8));
  EXPECT_FALSE(twisted_length_in_family(4, 9));
}

TEST(Hypergraph, OddlyBipartiteCounts) {
  EXPECT_EQ(complete_oddly_bipartite(3, 1).edge_count(), 1u);
  EXPECT_EQ(complete_oddly_bipartite(4, 4).edge_count(), 32u);
  EXPECT_EQ(complete_oddly_bipartite(5, 0).edge_count(), 0u);
  EXPECT_THROW(complete_oddly_bipartite(3, 3, 3), error);
  EXPECT_THROW(complete_oddly_bipartite(1, 2), error);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 10; ++b) {
      if (a + b < 4) continue;
      auto g = complete_oddly_bipartite(a, b);
      EXPECT_EQ(static_cast<long long>(g.edge_count()), choose(a, 3) * b + a * choose(b, 3));
      for (const auto& e : g.edges()) {
        int in_a = 0;
        for (int v : e) in_a += v < a;
        EXPECT_EQ(in_a % 2, 1);
      }
    }
}

TEST(Hypergraph, Blowup) {
  Hypergraph e4(4, 4, {{0, 1, 2, 3}});
  EXPECT_EQ(blowup(e4, 1), e4);
  for (int r = 2; r <= 4; ++r)
    for (int t = 1; t <= 3; ++t) {
      Edge e;
      for (int i = 0; i < r; ++i) e.push_back(i);
      long long expect = 1;
      for (int i = 0; i < r; ++i) expect *= t;
      EXPECT_EQ(static_cast<long long>(blowup(Hypergraph(r, r, {e}), t).edge_count()), expect);
    }
  auto k222 = blowup(tight_cycle(2, 3), 2);
  EXPECT_EQ(k222.edge_count(), 12u);
  EXPECT_EQ(k222.vertex_count(), 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(vertex_degree(k222, v), 4);
  EXPECT_THROW(blowup(e4, 0), error);
}

TEST(Hypergraph, Tournaments) {
  EXPECT_EQ(tournament_3graph(rotational_tournament(5)).edge_count(), 5u);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(tournament_3graph(transitive_tournament(n)).edge_count(), 0u);
  EXPECT_EQ(tournament_3graph(rotational_tournament(3)).edge_count(), 1u);
  Tournament bad(3, std::vector<bool>(3, false));
  EXPECT_THROW(tournament_3graph(bad), error);
  bad[0][0] = true;
  EXPECT_THROW(tournament_3graph(bad), error);
}

// Random tournaments: count cyclic triangles directly.
TEST(Hypergraph, TournamentTrianglesMatchDirectCount) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + trial % 6;
    Tournament t(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) (rng() & 1 ? t[i][j] : t[j][i]) = true;
    long long cyc = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[a][b] && t[b][c] && t[c][a]) ++cyc;
    EXPECT_EQ(static_cast<long long>(tournament_3graph(t).edge_count()), cyc / 3);
  }
}

TEST(Hypergraph, LinkDegreeNeighborhood) {
  auto c9 = tight_cycle(4, 9);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(degree(c9, {v}), 4);
  Hypergraph e(4, 4, {{0, 1, 2, 3}});
  auto l = link(e, 0);
  EXPECT_EQ(l.uniformity(), 3);
  EXPECT_EQ(l.edges(), (std::vector<Edge>{{1, 2, 3}}));
  EXPECT_THROW(degree(e, {}), error);
  EXPECT_THROW(degree(e, {0, 1, 2, 3}), error);
  EXPECT_THROW(degree(e, {0, 0}), error);
  EXPECT_THROW(link(e, 9), error);

  auto g = complete_oddly_bipartite(4, 4);
  // {0,1,4}: two in A, so the fourth vertex must come from A
  auto nb = neighborhood(g, {0, 1, 4});
  EXPECT_EQ(nb, (std::vector<Edge>{{2}, {3}}));
  // {0,4,5}: one in A, fourth vertex from B
  EXPECT_EQ(neighborhood(g, {0, 4, 5}), (std::vector<Edge>{{6}, {7}}));
  EXPECT_EQ(neighborhood(g, {0, 4, 5}, std::vector<Vertex>{6}), (std::vector<Edge>{{6}}));
}

TEST(Hypergraph, Shadow) {
  EXPECT_TRUE(shadow(TripleSet(5, {})).empty());
  EXPECT_EQ(shadow(TripleSet(5, {{4, 1, 2}})), (std::vector<Pair>{{1, 2}, {1, 4}, {2, 4}}));
  EXPECT_EQ(shadow(TripleSet::all(6)).size(), 15u);
  EXPECT_THROW(TripleSet(3, {{0, 1, 3}}), error);
}

TEST(Hypergraph, TextRoundTrip) {
  std::mt19937 rng(11);
  std::vector<Hypergraph> gs{tight_cycle(4, 9), complete_oddly_bipartite(3, 4), Hypergraph(3, 5),
                             twisted_tight_cycle(3, 7, Permutation::cyc(3))};
  for (int i = 0; i < 30; ++i) gs.push_back(oracle::random_hypergraph(2 + i % 3, 4 + i % 4, 0.4, rng));
  for (const auto& g : gs) EXPECT_EQ(parse_hypergraph(serialize_hypergraph(g)), g);
}

TEST(Hypergraph, TextFormatDetails) {
  auto g = parse_hypergraph("# comment\n3 5\n\n4 0 2\n  # indented comment\n0 1 2\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1, 2}, {0, 2, 4}}));
  EXPECT_EQ(serialize_hypergraph(g), "3 5\n0 1 2\n0 2 4\n");
  EXPECT_THROW(parse_hypergraph(""), error);
  EXPECT_THROW(parse_hypergraph("3 5\n0 1\n"), error);
  EXPECT_THROW(parse_hypergraph("3 5\n0 1 7\n"), error);
  EXPECT_THROW(parse_hypergraph("3 5\n0 1 x\n"), error);
  EXPECT_THROW(parse_hypergraph("3 5\n0 1 1\n"), error);
  try {
    parse_hypergraph("2 3\n0 1\n0 9\n");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
