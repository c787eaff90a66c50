#include <gtest/gtest.h>

#include <random>
#include <set>

#include "macc/coloring.hpp"
#include "macc/oracle.hpp"
#include "macc/rates.hpp"
#include "support.hpp"

using namespace macc;

namespace {

/// Properness straight from the definition: no node shares its color with an
/// interferer.
bool proper_by_interferers(const IcpInstance& icp, const Coloring& c) {
  for (int v = 0; v < icp.n_messages; ++v)
    for (int w : interferers(icp, v))
      if (c[v] == c[w]) return false;
  return true;
}

int local_count_by_sets(const IcpInstance& icp, const Coloring& c) {
  int best = 0;
  for (const auto& u : icp.users) {
    std::set<int> colors;
    for (int m = 0; m < icp.n_messages; ++m)
      if (!std::binary_search(u.known.begin(), u.known.end(), m)) colors.insert(c[m]);
    best = std::max(best, static_cast<int>(colors.size()));
  }
  return best;
}

}  // namespace

TEST(Coloring, MakeValidates) {
  EXPECT_THROW(Coloring::make({1, 3}), InvalidParameter);
  EXPECT_THROW(Coloring::make({0, 1}), InvalidParameter);
  EXPECT_EQ(Coloring::make({2, 1, 2}).n_colors, 2);
  EXPECT_EQ(Coloring::rainbow(4).n_colors, 4);
}

TEST(Interferers, SingleUnicastExample) {
  // user 0 wants 0 knows 1; user 1 wants 1 knows nothing; user 2 wants 2 knows 0,1
  const auto icp = IcpInstance::make(3, {{{0}, {1}}, {{1}, {}}, {{2}, {0, 1}}});
  EXPECT_EQ(interferers(icp, 0), (std::vector<int>{2}));
  EXPECT_EQ(interferers(icp, 1), (std::vector<int>{0, 2}));
  EXPECT_TRUE(interferers(icp, 2).empty());
  EXPECT_TRUE(is_proper(icp, Coloring::make({1, 2, 3})));
  EXPECT_FALSE(is_proper(icp, Coloring::make({1, 1, 2})));
  // 0 and 2 may not share because 0's requester lacks 2
  EXPECT_FALSE(is_proper(icp, Coloring::make({1, 2, 1})));
}

TEST(Coloring, ProperAndLocalCountMatchDefinitions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const auto icp = oracle_ref::random_icp(rng, n, 1 + trial % 6, 2);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = v % 3 + 1;
    std::shuffle(colors.begin(), colors.end(), rng);
    const auto c = Coloring::make(colors);
    EXPECT_EQ(is_proper(icp, c), proper_by_interferers(icp, c));
    EXPECT_EQ(local_count(icp, c), local_count_by_sets(icp, c));
    const auto g = greedy_coloring(icp);
    EXPECT_TRUE(proper_by_interferers(icp, g));
  }
}

// Cyclic coloring: proper whenever X >= a1+a2+2 divides K, with exactly
// min{a1+2a2+2, X} distinct colors in every user's view.
TEST(CyclicColoring, ProperWithExactLocalCount) {
  for (int K = 2; K <= 40; ++K)
    for (int a1 = 0; a1 <= K - 2; ++a1)
      for (int a2 = 0; a2 <= a1 && a1 + a2 + 1 < K; ++a2) {
        const auto d = UnionIcpDesc::make(a1, a2, K - a1 - a2 - 1);
        const auto icp = realize_union(d);
        for (int X = d.stride(); X <= K; ++X) {
          if (K % X) continue;
          const auto c = colorize_cyclic(d, X);
          ASSERT_TRUE(proper_by_interferers(icp, c)) << a1 << "," << a2 << " K=" << K << " X=" << X;
          ASSERT_EQ(local_count_by_sets(icp, c), std::min(a1 + 2 * a2 + 2, X));
        }
      }
}

TEST(CyclicColoring, RejectsUnusableX) {
  const auto d = UnionIcpDesc::make(2, 2, 9);
  EXPECT_THROW(colorize_cyclic(d, 5), InvalidParameter);
  EXPECT_THROW(colorize_cyclic(d, 6), InvalidParameter);
  EXPECT_NO_THROW(colorize_cyclic(d, 7));
}

// Split chain: proper on the m-fold split instance with local count
// min{m(a1+a2+2)+a2, K}, i.e. the fractional bound times m.
TEST(SplitChainColoring, ProperWithFractionalCount) {
  for (int K = 2; K <= 30; ++K)
    for (int a1 = 0; a1 <= K - 2; ++a1)
      for (int a2 = 0; a2 <= a1 && a1 + a2 + 1 < K; ++a2) {
        const auto d = UnionIcpDesc::make(a1, a2, K - a1 - a2 - 1);
        const auto sc = colorize_split_chain(d);
        const int m = K / d.stride();
        ASSERT_EQ(sc.split_factor, m);
        const auto icp = split_messages(realize_union(d), m);
        ASSERT_TRUE(proper_by_interferers(icp, sc.coloring)) << a1 << "," << a2 << " K=" << K;
        const int count = local_count_by_sets(icp, sc.coloring);
        ASSERT_EQ(count, std::min(m * d.stride() + a2, K));
        ASSERT_EQ(Rational(count, m), union_bounds(a1, a2, d.z).upper_fractional);
      }
}

// Small unions: the exact optimum sits between the lower bound a1+a2+2 and
// the structured upper bound.
TEST(UnionBounds, SandwichExactOptimum) {
  for (int K = 2; K <= 8; ++K)
    for (int a1 = 0; a1 <= K - 2; ++a1)
      for (int a2 = 0; a2 <= a1 && a1 + a2 + 1 < K; ++a2) {
        const auto d = UnionIcpDesc::make(a1, a2, K - a1 - a2 - 1);
        const auto icp = realize_union(d);
        const auto b = union_bounds(a1, a2, d.z);
        const int chi = exhaustive_chi_l(icp, 20).value;
        EXPECT_GE(chi, b.lower);
        EXPECT_LE(chi, b.upper_structured);
        const int acyclic = mais(icp);
        EXPECT_EQ(acyclic, b.lower) << a1 << "," << a2 << " K=" << K;
        EXPECT_LE(acyclic, chi);
      }
}
