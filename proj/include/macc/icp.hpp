#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macc/macc.hpp"

namespace macc {

/// One index-coding receiver. Message indices are 0-based and sorted.
struct IcpUser {
  std::vector<int> want;
  std::vector<int> known;
};

/// Index coding problem: n_messages messages, each user a (want, known) pair.
/// Interference sets are derived: everything neither wanted nor known.
struct IcpInstance {
  int n_messages = 0;
  std::vector<IcpUser> users;
  std::vector<std::string> labels;  ///< optional, empty or one per message

  /// Sorts, deduplicates and validates (disjoint sets, non-empty wants, range).
  static IcpInstance make(int n_messages, std::vector<IcpUser> users,
                          std::vector<std::string> labels = {});

  int n_users() const { return static_cast<int>(users.size()); }
  bool empty() const { return users.empty(); }
  /// 0/1 mask over messages of what `user` knows.
  std::vector<char> known_mask(int user) const;
};

/// (a1, a2)_z structured single-unicast ICP on K = a1 + a2 + z + 1 users:
/// user k wants x_k and knows x_{<k+a1+r>_K}, r in [z].
struct StructuredIcpDesc {
  int a1 = 0;
  int a2 = 0;
  int z = 1;

  static StructuredIcpDesc make(int a1, int a2, int z);
  int K() const { return a1 + a2 + z + 1; }
  friend bool operator==(const StructuredIcpDesc&, const StructuredIcpDesc&) = default;
};

/// Union of (a1,a2)_z and (a2,a1)_z over disjoint message sets, a2 <= a1.
struct UnionIcpDesc {
  int a1 = 0;
  int a2 = 0;
  int z = 1;

  static UnionIcpDesc make(int a1, int a2, int z);
  int K() const { return a1 + a2 + z + 1; }
  /// a1 + a2 + 2: the lower bound on the optimal rate and the color stride.
  int stride() const { return a1 + a2 + 2; }
  friend bool operator==(const UnionIcpDesc&, const UnionIcpDesc&) = default;
};

IcpInstance realize_single(const StructuredIcpDesc& desc);

/// Message (k, t) has index 2(k-1) + (t-1); user k wants both of its messages.
IcpInstance realize_union(const UnionIcpDesc& desc);

/// Splits every message into `parts` pieces; piece s of message x gets index
/// x*parts + s. Users want/know all pieces of what they wanted/knew.
IcpInstance split_messages(const IcpInstance& icp, int parts);

/// Identity of a subfile: part of `file` readable exactly by `users`.
struct SubfileKey {
  int file = 1;
  CircInterval users;

  friend bool operator==(const SubfileKey&, const SubfileKey&) = default;
};

/// K x (K - iL) table of needed subfiles. Node (p, q) is the q-th subfile
/// user p still needs: file d_p, readable by [<p+q>_K : <p+q+iL-1>_K].
/// Identical (file, interval) pairs share a message index.
struct IcpTable {
  int rows = 0;
  int cols = 0;
  int coverage = 0;  ///< iL
  std::vector<int> node_message;               ///< row-major, 0-based message ids
  std::vector<SubfileKey> messages;            ///< message id -> subfile
  std::vector<StructuredIcpDesc> column_descs; ///< column q -> (K-iL-q, q-1)_{iL}

  bool empty() const { return cols == 0; }
  int node(int p, int q) const { return node_message.at((p - 1) * cols + (q - 1)); }
  const SubfileKey& subfile(int p, int q) const { return messages.at(node(p, q)); }
  int n_messages() const { return static_cast<int>(messages.size()); }
};

IcpTable reduce_macc(const MaccInstance& instance, const DemandProfile& demands);

/// Single-unicast ICP over table nodes: one virtual user per node (p, q),
/// wanting that node's message and knowing every message readable by user p.
IcpInstance as_icp(const IcpTable& table);

struct ColumnPairing {
  std::vector<std::pair<int, int>> pairs;        ///< (j, K-iL-j+1), 1-based columns
  std::vector<UnionIcpDesc> union_descs;         ///< one per pair
  std::optional<int> middle_column;              ///< odd K-iL only
  std::optional<StructuredIcpDesc> middle_desc;  ///< ((K-iL-1)/2, (K-iL-1)/2)_{iL}
};

ColumnPairing pair_columns(const IcpTable& table);

/// ICP restricted to a block of table columns, as delivered by one scheme.
/// Users are the K table rows; each table message in the block is cut into
/// `halves` (1 or 2) pieces. Message order is row-major over
/// (row, column in block order, half) on first appearance.
struct BlockIcp {
  IcpInstance icp;
  std::vector<int> table_message;  ///< block message -> table message id
  std::vector<int> half;           ///< block message -> half index (0-based)
  /// Virtual node (row, column slot, half) -> block message. Virtual node
  /// indices follow realize_single / realize_union numbering.
  std::vector<int> node_to_message;
};

BlockIcp block_icp(const IcpTable& table, const std::vector<int>& columns, int halves);

std::string subfile_label(const SubfileKey& key, int K);

}  // namespace macc
