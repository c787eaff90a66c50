#include "macc/coloring.hpp"

#include <algorithm>

namespace macc {

namespace {

/// requesters[m] = users wanting message m.
std::vector<std::vector<int>> requesters(const IcpInstance& icp) {
  std::vector<std::vector<int>> out(icp.n_messages);
  for (int u = 0; u < icp.n_users(); ++u)
    for (int m : icp.users[u].want) out[m].push_back(u);
  return out;
}

/// unknown[u] = messages user u does not know (wanted ones included).
std::vector<std::vector<int>> unknown_sets(const IcpInstance& icp) {
  std::vector<std::vector<int>> out(icp.n_users());
  for (int u = 0; u < icp.n_users(); ++u) {
    const auto mask = icp.known_mask(u);
    for (int m = 0; m < icp.n_messages; ++m)
      if (!mask[m]) out[u].push_back(m);
  }
  return out;
}

}  // namespace

Coloring Coloring::make(std::vector<int> colors) {
  int top = 0;
  for (int c : colors) {
    if (c < 1) throw InvalidParameter("coloring: colors start at 1");
    top = std::max(top, c);
  }
  std::vector<char> used(top + 1, 0);
  for (int c : colors) used[c] = 1;
  for (int c = 1; c <= top; ++c)
    if (!used[c]) throw InvalidParameter("coloring: colors must be contiguous from 1");
  return Coloring{std::move(colors), top};
}

Coloring Coloring::rainbow(int n_nodes) {
  std::vector<int> c(n_nodes);
  for (int v = 0; v < n_nodes; ++v) c[v] = v + 1;
  return make(std::move(c));
}

std::vector<int> interferers(const IcpInstance& icp, int node) {
  if (node < 0 || node >= icp.n_messages) throw InvalidParameter("interferers: bad node");
  std::vector<char> hit(icp.n_messages, 0);
  for (const auto& u : icp.users) {
    if (!std::binary_search(u.want.begin(), u.want.end(), node)) continue;
    std::vector<char> known(icp.n_messages, 0);
    for (int m : u.known) known[m] = 1;
    for (int m = 0; m < icp.n_messages; ++m)
      if (!known[m] && m != node) hit[m] = 1;
  }
  std::vector<int> out;
  for (int m = 0; m < icp.n_messages; ++m)
    if (hit[m]) out.push_back(m);
  return out;
}

bool is_proper(const IcpInstance& icp, const Coloring& coloring) {
  if (coloring.size() != icp.n_messages) throw InvalidParameter("is_proper: coloring size mismatch");
  // A user's wanted message must not share a color with anything else it lacks.
  std::vector<int> seen(coloring.n_colors + 1, 0);
  const auto unknown = unknown_sets(icp);
  for (int u = 0; u < icp.n_users(); ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int m : unknown[u]) ++seen[coloring[m]];
    for (int w : icp.users[u].want)
      if (seen[coloring[w]] > 1) return false;
  }
  return true;
}

int local_count(const IcpInstance& icp, const Coloring& coloring) {
  if (coloring.size() != icp.n_messages) throw InvalidParameter("local_count: coloring size mismatch");
  int best = 0;
  std::vector<char> seen(coloring.n_colors + 1, 0);
  for (int u = 0; u < icp.n_users(); ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    const auto mask = icp.known_mask(u);
    int distinct = 0;
    for (int m = 0; m < icp.n_messages; ++m)
      if (!mask[m] && !seen[coloring[m]]) {
        seen[coloring[m]] = 1;
        ++distinct;
      }
    best = std::max(best, distinct);
  }
  return best;
}

Coloring colorize_cyclic(const UnionIcpDesc& desc, int n_colors) {
  const int K = desc.K();
  if (n_colors < desc.stride()) throw InvalidParameter("cyclic coloring: needs X >= a1+a2+2");
  if (K % n_colors != 0) throw InvalidParameter("cyclic coloring: X must divide K");
  std::vector<int> c(2 * K);
  for (int k = 1; k <= K; ++k) {
    c[2 * (k - 1)] = mod1(k, n_colors);
    c[2 * (k - 1) + 1] = mod1(k + desc.a1 + 1, n_colors);
  }
  return Coloring::make(std::move(c));
}

SplitColoring colorize_split_chain(const UnionIcpDesc& desc) {
  const int K = desc.K(), S = desc.stride();
  if (S > K) throw InvalidParameter("split-chain coloring: a1+a2+2 exceeds K");
  const int m = K / S;
  std::vector<int> c(static_cast<std::size_t>(2) * K * m);
  for (int k = 1; k <= K; ++k)
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < m; ++s) {
        const long long shift = static_cast<long long>(s) * S + (t == 1 ? desc.a1 + 1 : 0);
        c[(2 * (k - 1) + t) * m + s] = mod1(k + shift, K);
      }
  return SplitColoring{Coloring::make(std::move(c)), m};
}

Coloring greedy_coloring(const IcpInstance& icp) {
  const int n = icp.n_messages;
  // conflict[v] lists nodes that must differ from v (symmetric closure).
  std::vector<std::vector<int>> conflict(n);
  const auto req = requesters(icp);
  const auto unknown = unknown_sets(icp);
  for (int v = 0; v < n; ++v) {
    for (int u : req[v])
      for (int w : unknown[u])
        if (w != v) {
          conflict[v].push_back(w);
          conflict[w].push_back(v);
        }
  }
  std::vector<int> color(n, 0);
  std::vector<int> stamp(n + 2, -1);
  for (int v = 0; v < n; ++v) {
    for (int w : conflict[v])
      if (color[w]) stamp[color[w]] = v;
    int c = 1;
    while (stamp[c] == v) ++c;
    color[v] = c;
  }
  return Coloring::make(std::move(color));
}

}  // namespace macc
