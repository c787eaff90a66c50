#include "macc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace macc {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw SizeCapExceeded(std::string(what) + ": instance size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
}

struct ChiSearch {
  const IcpInstance& icp;
  int n;
  std::vector<int> order;
  std::vector<std::vector<int>> conflict;
  std::vector<std::vector<int>> lacking;  // message -> users that do not know it
  std::vector<std::vector<int>> count;    // user -> color -> assigned unknown messages
  std::vector<int> distinct;              // user -> distinct colors so far
  std::vector<int> color;
  int best;
  std::vector<int> best_color;

  void run(int pos, int used) {
    int current = 0;
    for (int d : distinct) current = std::max(current, d);
    if (current >= best) return;
    if (pos == n) {
      best = current;
      best_color = color;
      return;
    }
    const int v = order[pos];
    for (int c = 1; c <= std::min(used + 1, n); ++c) {
      bool clash = false;
      for (int w : conflict[v])
        if (color[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[v] = c;
      for (int u : lacking[v])
        if (count[u][c]++ == 0) ++distinct[u];
      run(pos + 1, std::max(used, c));
      for (int u : lacking[v])
        if (--count[u][c] == 0) --distinct[u];
      color[v] = 0;
    }
  }
};

}  // namespace

ChiResult exhaustive_chi_l(const IcpInstance& icp, int cap) {
  const int n = icp.n_messages;
  check_cap(n, cap, "exhaustive_chi_l");
  if (n == 0) return ChiResult{0, Coloring{}};

  ChiSearch s{icp, n, {}, std::vector<std::vector<int>>(n), std::vector<std::vector<int>>(n), {}, {}, {}, 0, {}};
  s.count.assign(icp.n_users(), std::vector<int>(n + 1, 0));
  s.distinct.assign(icp.n_users(), 0);
  s.color.assign(n, 0);
  for (int u = 0; u < icp.n_users(); ++u) {
    const auto known = icp.known_mask(u);
    for (int m = 0; m < n; ++m) {
      if (known[m]) continue;
      s.lacking[m].push_back(u);
      for (int w : icp.users[u].want)
        if (w != m) {
          s.conflict[w].push_back(m);
          s.conflict[m].push_back(w);
        }
    }
  }
  for (auto& c : s.conflict) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return s.conflict[a].size() > s.conflict[b].size(); });

  const Coloring start = greedy_coloring(icp);
  s.best = local_count(icp, start) + 1;
  s.run(0, 0);
  return ChiResult{s.best, Coloring::make(s.best_color)};
}

int mais(const IcpInstance& icp, int cap) {
  struct Node {
    int user, message;
  };
  std::vector<Node> nodes;
  for (int u = 0; u < icp.n_users(); ++u)
    for (int w : icp.users[u].want) nodes.push_back({u, w});
  const int n = static_cast<int>(nodes.size());
  check_cap(n, std::min(cap, 30), "mais");
  if (n == 0) return 0;

  std::vector<std::uint32_t> out(n, 0);
  for (int a = 0; a < n; ++a) {
    const auto known = icp.known_mask(nodes[a].user);
    for (int b = 0; b < n; ++b)
      if (a != b && (known[nodes[b].message] || nodes[a].message == nodes[b].message)) out[a] |= 1u << b;
  }
  // A set is acyclic iff it has a sink whose removal leaves an acyclic set.
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<char> acyclic(static_cast<std::size_t>(full) + 1, 0);
  acyclic[0] = 1;
  int best = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t without = set & ~(1u << v);
      if ((out[v] & without) == 0 && acyclic[without]) {
        acyclic[set] = 1;
        break;
      }
    }
    if (acyclic[set]) best = std::max(best, std::popcount(set));
    if (set == full) break;
  }
  return best;
}

namespace {

using Bits = std::uint64_t;

struct MinRankSearch {
  std::vector<Bits> fixed_one;  // the wanted message bit per row
  std::vector<Bits> free;       // side-information bits per row
  std::vector<std::vector<int>> free_positions;
  int best;

  /// Some vector of span(basis) equals fixed_one on every non-free coordinate.
  static bool in_span(const std::vector<Bits>& basis, Bits target, Bits care) {
    const std::size_t r = basis.size();
    for (std::uint64_t combo = 1; combo < (std::uint64_t{1} << r); ++combo) {
      Bits v = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (combo >> k & 1) v ^= basis[k];
      if ((v & care) == target) return true;
    }
    return false;
  }

  void run(std::size_t row, std::vector<Bits>& basis) {
    const int r = static_cast<int>(basis.size());
    if (r >= best) return;
    if (row == fixed_one.size()) {
      best = r;
      return;
    }
    const Bits care = ~free[row];
    // Staying inside the span never hurts: any completion of a larger span
    // also completes this one with rank no larger.
    if (in_span(basis, fixed_one[row], care)) {
      run(row + 1, basis);
      return;
    }
    const auto& pos = free_positions[row];
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pos.size()); ++pick) {
      Bits v = fixed_one[row];
      for (std::size_t k = 0; k < pos.size(); ++k)
        if (pick >> k & 1) v |= Bits{1} << pos[k];
      basis.push_back(v);
      run(row + 1, basis);
      basis.pop_back();
      if (best <= r + 1) return;
    }
  }
};

}  // namespace

int min_rank_gf2(const IcpInstance& icp, int cap) {
  if (icp.n_messages > 64) throw SizeCapExceeded("min_rank_gf2: more than 64 messages");
  MinRankSearch s;
  int rows = 0;
  for (const auto& u : icp.users) rows += static_cast<int>(u.want.size());
  check_cap(rows, cap, "min_rank_gf2");
  for (const auto& u : icp.users) {
    Bits known = 0;
    std::vector<int> pos;
    for (int m : u.known) {
      known |= Bits{1} << m;
      pos.push_back(m);
    }
    if (pos.size() > 20) throw SizeCapExceeded("min_rank_gf2: more than 20 side-information messages per user");
    for (int w : u.want) {
      s.fixed_one.push_back(Bits{1} << w);
      s.free.push_back(known);
      s.free_positions.push_back(pos);
    }
  }
  s.best = rows + 1;
  std::vector<Bits> basis;
  s.run(0, basis);
  return s.best;
}

}  // namespace macc
