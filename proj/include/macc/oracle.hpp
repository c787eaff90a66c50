#pragma once

#include <stdexcept>

#include "macc/coloring.hpp"
#include "macc/icp.hpp"

namespace macc {

/// Raised when an exhaustive search would exceed its configured size cap.
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChiResult {
  int value = 0;
  Coloring coloring;  ///< a proper coloring attaining `value`
};

/// Minimum local count over all proper colorings (the local chromatic number
/// of the conflict graph). Branch and bound; at most `cap` messages.
ChiResult exhaustive_chi_l(const IcpInstance& icp, int cap = 20);

/// Maximum acyclic induced subgraph of the side-information digraph. Nodes
/// are (user, wanted message) pairs; u -> v when u's user knows v's message,
/// and nodes asking for the same message point at each other. At most `cap`
/// nodes.
int mais(const IcpInstance& icp, int cap = 24);

/// Minimum rank over GF(2) of a matrix fitting the instance: one row per
/// (user, wanted message), 1 at the wanted message, free where the user has
/// side information, 0 elsewhere. At most `cap` rows and 64 messages.
int min_rank_gf2(const IcpInstance& icp, int cap = 10);

}  // namespace macc
