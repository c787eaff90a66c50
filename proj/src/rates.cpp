#include "macc/rates.hpp"

#include <algorithm>
#include <numeric>

#include "macc/icp.hpp"
#include "macc/macc.hpp"

namespace macc {

namespace {

struct Corner {
  int K, L, i;
  int iL() const { return i * L; }
  int deficit() const { return K - iL(); }
  bool full() const { return iL() >= K; }
  bool placed() const { return i >= 1 && i <= K / L; }
};

Corner validate(int K, int L, int i) {
  const auto inst = MaccInstance::make(std::max(K, 1), K, L, i);
  return Corner{inst.K(), inst.L(), inst.i()};
}

RateReport full_coverage(std::string scheme) {
  return RateReport::value(std::move(scheme), Rational(0), std::nullopt, "every user reads every subfile");
}

RateReport uncoded(std::string scheme, int K) {
  return RateReport::value(std::move(scheme), Rational(K), 1, "no cache memory: uncoded delivery");
}

bool divides(std::int64_t d, std::int64_t n) { return d != 0 && n % d == 0; }

}  // namespace

RateReport RateReport::not_applicable(std::string scheme, std::string reason) {
  RateReport r;
  r.scheme = std::move(scheme);
  r.reason = std::move(reason);
  return r;
}

RateReport RateReport::value(std::string scheme, Rational rate, std::optional<std::int64_t> f,
                             std::string reason) {
  RateReport r;
  r.scheme = std::move(scheme);
  r.applicable = true;
  r.rate = rate;
  r.subpacketization = f;
  r.reason = std::move(reason);
  return r;
}

std::optional<int> smallest_divisor_at_least(int K, int lower) {
  for (int x = std::max(lower, 1); x <= K; ++x)
    if (K % x == 0) return x;
  return std::nullopt;
}

RateReport r1(int K, int L, int i) {
  const auto c = validate(K, L, i);
  if (c.full() && c.placed()) return full_coverage("r1");
  if (!c.placed()) return RateReport::not_applicable("r1", "requires i in [1, floor(K/L)]");
  const std::int64_t D = c.deficit();
  if (!divides(i, K)) return RateReport::not_applicable("r1", "i does not divide K");
  if (!divides(D + i, K)) return RateReport::not_applicable("r1", "K-iL+i does not divide K");
  return RateReport::value("r1", Rational(D * (D + i), 2 * static_cast<std::int64_t>(K)), std::nullopt);
}

RateReport r2_f2(int K, int L, int i) {
  const auto c = validate(K, L, i);
  if (!c.placed()) {
    if (c.full()) return full_coverage("r2");
    return RateReport::not_applicable("r2", "requires i in [1, floor(K/L)]");
  }
  const std::int64_t D = c.deficit(), Kl = K;
  if (divides(D + 1, K) || D == 1)
    return RateReport::value("r2", Rational(D * (D + 1), 2 * Kl), Kl, "(K-iL+1) | K or K-iL = 1");
  const std::int64_t q = Kl / (D + 1);
  if (mod1(K, static_cast<int>(D + 1)) == D)
    return RateReport::value("r2", Rational(D, 2 * q + 1), (2 * q + 1) * Kl, "<K>_{K-iL+1} = K-iL");
  return RateReport::value("r2", Rational(D, 2 * q), 2 * q * Kl, "general branch");
}

int single_icp_bound(int a1, int a2, int z) {
  StructuredIcpDesc::make(a1, a2, z);
  return a1 + a2 + 1;
}

UnionBounds union_bounds(int a1, int a2, int z) {
  const auto d = UnionIcpDesc::make(a1, a2, z);
  const int K = d.K(), S = d.stride();
  UnionBounds b;
  b.lower = S;
  b.upper_structured = K % S == 0 ? S : std::min(a1 + 2 * a2 + 2, K);
  b.upper_divisor = smallest_divisor_at_least(K, S);
  const std::int64_t m = K / S;
  b.upper_fractional = Rational(std::min<std::int64_t>(m * S + a2, K), m);
  return b;
}

RateReport r3(int K, int L, int i, std::optional<int> X) {
  const auto c = validate(K, L, i);
  if (c.full()) return full_coverage("r3");
  const int D = c.deficit();
  if (X) {
    if (*X < D + 1 || !divides(*X, K))
      throw InvalidParameter("r3: X must satisfy X >= K-iL+1 and X | K");
  } else {
    X = smallest_divisor_at_least(K, D + 1);
    if (!X) return RateReport::not_applicable("r3", "no divisor of K is >= K-iL+1");
  }
  const std::int64_t f = D % 2 == 0 ? K : K + 1;
  auto r = RateReport::value("r3", Rational(static_cast<std::int64_t>(D) * *X, 2 * static_cast<std::int64_t>(K)), f,
                             "X = " + std::to_string(*X));
  return r;
}

RateReport r4(int K, int L, int i) {
  const auto c = validate(K, L, i);
  if (i == 0) return uncoded("r4", K);
  if (c.full()) return full_coverage("r4");
  if (!c.placed()) return RateReport::not_applicable("r4", "requires i in [0, floor(K/L)]");
  const std::int64_t D = c.deficit(), Kl = K, z = c.iL();
  if (divides(D + 1, K) || D == 1)
    return RateReport::value("r4", Rational(D * (D + 1), 2 * Kl), (D % 2 == 0 || D == 1) ? Kl : Kl + 1,
                             "(K-iL+1) | K or K-iL = 1");
  if (D % 2 == 0) {
    if (Kl >= 3 * z) return RateReport::value("r4", Rational(Kl * D - z * (z - 1), 2 * Kl), Kl, "K-iL even, K >= 3iL");
    return RateReport::value("r4", Rational(D * (5 * D + 2), 8 * Kl), Kl, "K-iL even, K < 3iL");
  }
  if (Kl >= 3 * z + 1)
    return RateReport::value("r4", Rational(Kl * (D + 1) - z * (z + 1), 2 * Kl), Kl, "K-iL odd, K >= 3iL+1");
  // Pair terms min{K-iL+j, K} never saturate here; the unsplit middle column
  // adds K-iL.
  auto r = RateReport::value("r4", Rational((D - 1) * (5 * D + 9) + 8, 8 * Kl), Kl, "K-iL odd, K < 3iL+1");
  r.note = "block sum used; adding 1 instead of 1/K to the first term would give " +
           to_string(Rational((D - 1) * (5 * D + 9), 8 * Kl) + 1);
  return r;
}

RateReport r5_f5(int K, int L, int i) {
  const auto c = validate(K, L, i);
  if (i == 0) return uncoded("r5", K);
  if (c.full()) return full_coverage("r5");
  if (!c.placed()) return RateReport::not_applicable("r5", "requires i in [0, floor(K/L)]");
  const std::int64_t D = c.deficit(), Kl = K, S = D + 1, m = Kl / S;
  auto term = [&](std::int64_t j) { return Rational(std::min(m * S + j, Kl), m * Kl); };
  Rational rate(0);
  if (D % 2 == 0) {
    for (std::int64_t j = 0; j <= D / 2 - 1; ++j) rate += term(j);
  } else {
    rate += Rational(std::min(m * S + (D - 1) / 2, Kl), 2 * m * Kl);
    for (std::int64_t j = 0; j <= (D - 3) / 2; ++j) rate += term(j);
  }
  const std::int64_t k_tilde = (D % 2 == 0 || D == 1) ? Kl : Kl + 1;
  const std::int64_t f = (divides(S, K) || D == 1) ? k_tilde : k_tilde * m;
  return RateReport::value("r5", rate, f, D % 2 == 0 ? "K-iL even" : "K-iL odd");
}

Rational memory_share(std::vector<std::pair<Rational, Rational>> corners, Rational memory) {
  if (corners.empty()) throw InvalidParameter("memory_share: no corner points");
  std::sort(corners.begin(), corners.end());
  // keep the lowest rate per memory value
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : corners)
    if (pts.empty() || pts.back().first != p.first) pts.push_back(p);
  if (memory < pts.front().first || memory > pts.back().first)
    throw InvalidParameter("memory_share: M outside the corner-point range");

  // lower convex hull, monotone chain
  std::vector<std::pair<Rational, Rational>> hull;
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= Rational(0)) hull.pop_back();
    hull.push_back(p);
  }
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto& [m0, r0] = hull[s];
    const auto& [m1, r1v] = hull[s + 1];
    if (memory >= m0 && memory <= m1) return r0 + (r1v - r0) * (memory - m0) / (m1 - m0);
  }
  return hull.back().second;
}

std::vector<RateReport> compare(int K, int L, int i) {
  return {r1(K, L, i), r2_f2(K, L, i), r3(K, L, i), r4(K, L, i), r5_f5(K, L, i)};
}

std::vector<RateReport> compare_at_memory(int N, int K, int L, Rational memory) {
  const auto inst = MaccInstance::make(N, K, L, 0);
  std::vector<std::vector<std::pair<Rational, Rational>>> corners(5);
  std::vector<std::string> names;
  for (int i = 0; i <= inst.max_memory_index(); ++i) {
    const auto row = compare(K, L, i);
    if (names.empty())
      for (const auto& r : row) names.push_back(r.scheme);
    for (std::size_t s = 0; s < row.size(); ++s)
      if (row[s].applicable) corners[s].emplace_back(Rational(i * static_cast<std::int64_t>(N), K), *row[s].rate);
  }
  std::vector<RateReport> out;
  for (std::size_t s = 0; s < names.size(); ++s) {
    const auto& pts = corners[s];
    const bool inside = !pts.empty() && memory >= pts.front().first && memory <= pts.back().first;
    if (!inside) {
      out.push_back(RateReport::not_applicable(names[s], "M outside the scheme's corner range"));
      continue;
    }
    out.push_back(RateReport::value(names[s], memory_share(pts, memory), std::nullopt, "memory sharing"));
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace macc
