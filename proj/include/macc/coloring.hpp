#pragma once

#include <vector>

#include "macc/icp.hpp"

namespace macc {

/// Color per message (the coloring nodes), colors in [1, n_colors].
struct Coloring {
  std::vector<int> colors;
  int n_colors = 0;

  /// Validates range and that every color in [1, max] is used.
  static Coloring make(std::vector<int> colors);
  static Coloring uniform(int n_nodes) { return make(std::vector<int>(n_nodes, 1)); }
  static Coloring rainbow(int n_nodes);

  int operator[](int node) const { return colors.at(node); }
  int size() const { return static_cast<int>(colors.size()); }
};

/// Nodes other than `node` that some requester of `node` neither knows nor
/// wants as `node` itself. Sorted.
std::vector<int> interferers(const IcpInstance& icp, int node);

/// No node shares its color with any of its interferers.
bool is_proper(const IcpInstance& icp, const Coloring& coloring);

/// Largest number of distinct colors among the messages a single user does
/// not know (its closed anti-outneighborhood).
int local_count(const IcpInstance& icp, const Coloring& coloring);

/// Cyclic coloring of realize_union(desc) with `n_colors` colors:
/// node (k,1) -> <k>_X, node (k,2) -> <k+a1+1>_X. Needs X >= a1+a2+2, X | K.
Coloring colorize_cyclic(const UnionIcpDesc& desc, int n_colors);

struct SplitColoring {
  Coloring coloring;  ///< over split_messages(realize_union(desc), split_factor)
  int split_factor = 1;
};

/// Every message cut into m = floor(K / (a1+a2+2)) pieces; piece s of
/// (k, t) sits in table column p = 2s + t and is colored by a forward chain
/// of stride a1+a2+2 with K colors. Local count is min{m(a1+a2+2)+a2, K}.
SplitColoring colorize_split_chain(const UnionIcpDesc& desc);

/// First-fit in message order, avoiding colors of interferers in both
/// directions.
Coloring greedy_coloring(const IcpInstance& icp);

}  // namespace macc
