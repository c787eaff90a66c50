#include <gtest/gtest.h>

#include "macc/coloring.hpp"
#include "macc/icp.hpp"
#include "macc/rates.hpp"

using namespace macc;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::optional<int> divisor_at_least(int K, int lower) {
  for (int x = lower; x <= K; ++x)
    if (K % x == 0) return x;
  return std::nullopt;
}

/// Linear-F rate summed block by block: pair j contributes min{K-iL+j, K}
/// transmissions of size 1/K; an odd middle column contributes K-iL. When
/// K-iL+1 divides K every pair costs K-iL+1 and the middle is halved.
Rational r4_by_blocks(int K, int L, int i) {
  const int D = K - i * L, S = D + 1;
  if (D == 1 || K % S == 0) return R(static_cast<std::int64_t>(D) * S, 2 * K);
  Rational sum(0);
  for (int j = 1; 2 * j <= D; ++j) sum += R(std::min(D + j, K), K);
  if (D % 2) sum += R(D, K);
  return sum;
}

/// Quadratic-F rate from the split-chain colorings themselves.
Rational r5_by_colorings(int K, int L, int i) {
  const int D = K - i * L, z = i * L;
  Rational sum(0);
  for (int j = 1; 2 * j <= D; ++j) {
    const auto d = UnionIcpDesc::make(D - j, j - 1, z);
    const auto sc = colorize_split_chain(d);
    sum += R(local_count(split_messages(realize_union(d), sc.split_factor), sc.coloring),
             static_cast<std::int64_t>(sc.split_factor) * K);
  }
  if (D % 2) {
    const int c = (D - 1) / 2;
    const auto d = UnionIcpDesc::make(c, c, z);
    const auto sc = colorize_split_chain(d);
    sum += R(local_count(split_messages(realize_union(d), sc.split_factor), sc.coloring),
             2 * static_cast<std::int64_t>(sc.split_factor) * K);
  }
  return sum;
}

}  // namespace

TEST(Rates, LargeExampleComparison) {
  const auto row = compare(100, 4, 20);
  ASSERT_EQ(row.size(), 5u);
  EXPECT_FALSE(row[0].applicable);
  EXPECT_EQ(*row[1].rate, R(5, 2));
  EXPECT_EQ(*row[1].subpacketization, 800);
  EXPECT_EQ(*row[2].rate, R(5, 2));
  EXPECT_EQ(*r3(100, 4, 20, 25).rate, R(5, 2));
  EXPECT_EQ(*row[3].rate, R(51, 20));
  EXPECT_EQ(*row[4].rate, R(177, 80));
  EXPECT_EQ(*row[4].subpacketization, 400);
}

TEST(Rates, WorkedExample) {
  EXPECT_EQ(*r4(8, 2, 3).rate, R(3, 8));
  EXPECT_EQ(*r4(8, 2, 3).subpacketization, 8);
  EXPECT_EQ(*r5_f5(8, 2, 3).rate, R(3, 8));
  EXPECT_EQ(*r5_f5(8, 2, 3).subpacketization, 16);
  // K mod (K-iL+1) = K-iL branch
  EXPECT_EQ(*r2_f2(8, 2, 3).rate, R(2, 5));
  EXPECT_EQ(*r2_f2(8, 2, 3).subpacketization, 40);
  EXPECT_EQ(*r3(8, 2, 3).rate, R(1, 2));
}

TEST(Rates, UnionBoundExamples) {
  const auto b = union_bounds(2, 2, 9);
  EXPECT_EQ(b.lower, 6);
  EXPECT_EQ(b.upper_structured, 8);
  EXPECT_EQ(*b.upper_divisor, 7);
  const auto big = union_bounds(10, 10, 1000);
  EXPECT_EQ(big.lower, 22);
  EXPECT_EQ(big.upper_structured, 32);
  EXPECT_EQ(big.upper_fractional, R(1021, 46));
  EXPECT_EQ(single_icp_bound(3, 1, 2), 5);
}

TEST(Rates, Corners) {
  for (const auto& r : {r4(9, 2, 0), r5_f5(9, 2, 0)}) {
    EXPECT_EQ(*r.rate, R(9));
    EXPECT_EQ(*r.subpacketization, 1);
  }
  EXPECT_FALSE(r1(9, 2, 0).applicable);
  EXPECT_FALSE(r2_f2(9, 2, 0).applicable);
  EXPECT_FALSE(r3(9, 2, 0).applicable);
  for (const auto& r : compare(6, 2, 3)) EXPECT_EQ(*r.rate, R(0)) << r.scheme;
  for (const auto& r : compare(7, 2, 4)) EXPECT_EQ(*r.rate, R(0)) << r.scheme;
  EXPECT_THROW(r4(8, 2, 5), InvalidParameter);
  EXPECT_THROW(r3(8, 2, 3, 3), InvalidParameter);
  EXPECT_THROW(r3(8, 2, 3, 2), InvalidParameter);
}

TEST(Rates, ClosedFormsMatchBlockSums) {
  for (int K = 2; K <= 120; ++K)
    for (int L = 1; L <= K; ++L)
      for (int i = 1; i * L < K; ++i) {
        const int D = K - i * L;
        ASSERT_EQ(*r4(K, L, i).rate, r4_by_blocks(K, L, i)) << K << "," << L << "," << i;
        const auto x = divisor_at_least(K, D + 1);
        ASSERT_TRUE(x.has_value());
        ASSERT_EQ(*r3(K, L, i).rate, R(static_cast<std::int64_t>(D) * *x, 2 * K));
        ASSERT_EQ(*r3(K, L, i).subpacketization, D % 2 ? K + 1 : K);
        if (r1(K, L, i).applicable) {
          ASSERT_EQ(*r1(K, L, i).rate, R(static_cast<std::int64_t>(D) * (D + i), 2 * K));
          ASSERT_EQ(K % i, 0);
          ASSERT_EQ(K % (D + i), 0);
        }
      }
}

TEST(Rates, QuadraticMatchesColorings) {
  for (int K = 2; K <= 36; ++K)
    for (int L = 1; L <= K; ++L)
      for (int i = 1; i * L < K; ++i) ASSERT_EQ(*r5_f5(K, L, i).rate, r5_by_colorings(K, L, i)) << K << "," << L << "," << i;
}

TEST(Rates, OrderingProperties) {
  for (int K = 2; K <= 80; ++K)
    for (int L = 1; L <= K; ++L)
      for (int i = 1; i * L < K; ++i) {
        const auto a = *r4(K, L, i).rate, b = *r5_f5(K, L, i).rate, c = *r3(K, L, i).rate;
        ASSERT_LE(b, a) << K << "," << L << "," << i;
        ASSERT_GT(b, R(0));
        // uncoded delivery of the missing subfiles is never beaten by less
        ASSERT_LE(a, R(K - i * L));
        ASSERT_LE(c, R(K - i * L));
      }
}

TEST(MemoryShare, LowerConvexEnvelope) {
  std::vector<std::pair<Rational, Rational>> pts{{R(0), R(4)}, {R(1), R(3)}, {R(2), R(1)}, {R(4), R(0)}};
  EXPECT_EQ(memory_share(pts, R(1)), R(5, 2));  // (1,3) lies above the chord
  EXPECT_EQ(memory_share(pts, R(2)), R(1));
  EXPECT_EQ(memory_share(pts, R(3)), R(1, 2));
  EXPECT_EQ(memory_share(pts, R(0)), R(4));
  EXPECT_THROW(memory_share(pts, R(5)), InvalidParameter);
  EXPECT_THROW(memory_share({}, R(0)), InvalidParameter);
}

TEST(MemoryShare, AgreesWithCornersAndIsConvex) {
  const int N = 8, K = 8, L = 2;
  for (int i = 0; i <= 4; ++i) {
    const auto shared = compare_at_memory(N, K, L, R(i * N, K));
    EXPECT_LE(*shared[3].rate, *r4(K, L, i).rate);
    EXPECT_LE(*shared[4].rate, *r5_f5(K, L, i).rate);
  }
  Rational prev = R(1000);
  for (int k = 0; k <= 32; ++k) {
    const auto v = *compare_at_memory(N, K, L, R(k, 4))[4].rate;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Rates, OddBranchCarriesNote) {
  // K = 7, iL = 4: K-iL odd and K < 3iL+1
  const auto r = r4(7, 2, 2);
  EXPECT_EQ(*r.rate, Rational(1));
  EXPECT_NE(r.note.find("13/7"), std::string::npos);
  EXPECT_TRUE(r4(8, 2, 3).note.empty());
}
