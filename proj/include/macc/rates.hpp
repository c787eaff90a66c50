#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace macc {

using Rational = boost::rational<std::int64_t>;

/// Rate (in file units) and subpacketization of one delivery scheme at one
/// corner point. `rate` is absent when the scheme does not apply.
struct RateReport {
  std::string scheme;
  bool applicable = false;
  std::optional<Rational> rate;
  std::optional<std::int64_t> subpacketization;
  std::string reason;  ///< why not applicable, or which branch was taken
  std::string note;    ///< flagged discrepancies

  static RateReport not_applicable(std::string scheme, std::string reason);
  static RateReport value(std::string scheme, Rational rate, std::optional<std::int64_t> f,
                          std::string reason = {});
};

/// PDA-based linear scheme: (K-iL)(K-iL+i)/(2K) when i | K and (K-iL+i) | K.
RateReport r1(int K, int L, int i);

/// Prior general scheme with its three branches for rate and F.
RateReport r2_f2(int K, int L, int i);

/// Bound for one (a1,a2)_z ICP: a1 + a2 + 1.
int single_icp_bound(int a1, int a2, int z);

struct UnionBounds {
  int lower = 0;                 ///< a1 + a2 + 2
  int upper_structured = 0;      ///< a1+a2+2 if it divides K, else min{a1+2a2+2, K}
  std::optional<int> upper_divisor;  ///< smallest divisor of K that is >= a1+a2+2
  Rational upper_fractional;     ///< min{m(a1+a2+2)+a2, K}/m, m = floor(K/(a1+a2+2))
};

UnionBounds union_bounds(int a1, int a2, int z);

/// (K-iL)X/(2K) for X >= K-iL+1 with X | K; X auto-selected as the smallest
/// such divisor when not given. F = K (K-iL even) or K+1 (odd).
RateReport r3(int K, int L, int i, std::optional<int> X = std::nullopt);

/// Linear-subpacketization rate with the tight / even / odd branches.
RateReport r4(int K, int L, int i);

/// Quadratic-subpacketization rate with its subpacketization.
RateReport r5_f5(int K, int L, int i);

/// Smallest divisor of K that is >= lower, if any.
std::optional<int> smallest_divisor_at_least(int K, int lower);

/// Rate at `memory` on the lower convex envelope of (memory, rate) corners.
Rational memory_share(std::vector<std::pair<Rational, Rational>> corners, Rational memory);

/// r1, r2_f2, r3 (auto X), r4, r5_f5 side by side.
std::vector<RateReport> compare(int K, int L, int i);

/// Memory-shared value of every scheme of `compare` at M (file units),
/// interpolating its applicable corners i in [0, ceil(K/L)].
std::vector<RateReport> compare_at_memory(int N, int K, int L, Rational memory);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace macc
