#include <hypernull/hyperpath.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace hypernull;

namespace {

std::vector<int> iota_edge(int first, int k)
{
  std::vector<int> e(k);
  for (int t = 0; t < k; ++t)
    e[t] = first + t;
  return e;
}

}  // namespace

TEST(Hyperpath, SingleEdge)
{
  const auto h = build_hyperpath(1, 3);
  EXPECT_EQ(h.vertex_count(), 3);
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_EQ(h.edges[0], (std::vector<int>{1, 2, 3}));
}

TEST(Hyperpath, FiveEdgesRankThree)
{
  const auto h = build_hyperpath(5, 3);
  EXPECT_EQ(h.vertex_count(), 11);
  for (int j = 1; j <= 5; ++j)
    EXPECT_EQ(h.edges[j - 1], iota_edge(2 * j - 1, 3));
  EXPECT_EQ(h.edges.back(), (std::vector<int>{9, 10, 11}));
}

TEST(Hyperpath, TwoEdgesRankFour)
{
  const auto h = build_hyperpath(2, 4);
  EXPECT_EQ(h.vertex_count(), 7);
  EXPECT_EQ(h.edges[0], (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(h.edges[1], (std::vector<int>{4, 5, 6, 7}));
}

TEST(Hyperpath, RejectsBadArguments)
{
  EXPECT_THROW(build_hyperpath(0, 3), std::invalid_argument);
  EXPECT_THROW(build_hyperpath(3, 2), std::invalid_argument);
}

TEST(Hyperpath, LooseIntersectionPattern)
{
  for (int k = 3; k <= 6; ++k) {
    for (int n = 1; n <= 8; ++n) {
      const auto h = build_hyperpath(n, k);
      EXPECT_EQ(h.vertex_count(), (k - 1) * n + 1);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          int shared = 0;
          for (int a : h.edges[i])
            shared += static_cast<int>(std::count(h.edges[j].begin(), h.edges[j].end(), a));
          EXPECT_EQ(shared, j == i + 1 ? 1 : 0) << "n=" << n << " k=" << k;
        }
      }
    }
  }
}

TEST(AuxGraph, ThreeEdges)
{
  // Degree-one vertices of P_3^3 are 1, 2, 4, 6, 7 with links x2x3, x1x3,
  // x3x5, x5x7, x5x6.
  const auto g = aux_graph(3);
  const std::vector<IndexPair> expected{{2, 3}, {1, 3}, {3, 5}, {5, 7}, {5, 6}};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.vertices, (std::set<int>{1, 2, 3, 5, 6, 7}));
}

TEST(AuxGraph, FiveEdgesMatchesFigure)
{
  const auto g = aux_graph(5);
  std::set<IndexPair> got(g.edges.begin(), g.edges.end());
  const std::set<IndexPair> expected{{1, 3}, {2, 3}, {3, 5}, {5, 7}, {7, 9}, {9, 10}, {9, 11}};
  EXPECT_EQ(got, expected);
}

TEST(AuxGraph, FourEdgesVertexSet)
{
  const auto g = aux_graph(4);
  EXPECT_EQ(g.vertices, (std::set<int>{1, 2, 3, 5, 7, 8, 9}));
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(), IndexPair{5, 7}), g.edges.end());
}

TEST(AuxGraph, EdgeCountIsNPlusTwo)
{
  for (int n = 3; n <= 20; ++n) {
    const auto g = aux_graph(n);
    EXPECT_EQ(static_cast<int>(g.edges.size()), n + 2);
    // Odd interior path plus two leaves at each end.
    std::set<IndexPair> got(g.edges.begin(), g.edges.end());
    std::set<IndexPair> expected{{1, 3}, {2, 3}, {2 * n - 1, 2 * n}, {2 * n - 1, 2 * n + 1}};
    for (int a = 3; a + 2 <= 2 * n - 1; a += 2)
      expected.insert({a, a + 2});
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(AuxGraph, RejectsSmallN)
{
  EXPECT_THROW(aux_graph(2), std::invalid_argument);
}
