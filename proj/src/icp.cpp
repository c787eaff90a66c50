#include "macc/icp.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace macc {

namespace {

void normalize(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

IcpInstance IcpInstance::make(int n_messages, std::vector<IcpUser> users,
                              std::vector<std::string> labels) {
  if (n_messages < 0) throw InvalidParameter("ICP: negative message count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n_messages)
    throw InvalidParameter("ICP: labels must be empty or one per message");
  for (auto& u : users) {
    normalize(u.want);
    normalize(u.known);
    if (u.want.empty()) throw InvalidParameter("ICP: every user must want something");
    for (const auto* set : {&u.want, &u.known})
      for (int m : *set)
        if (m < 0 || m >= n_messages) throw InvalidParameter("ICP: message index out of range");
    std::vector<int> both;
    std::set_intersection(u.want.begin(), u.want.end(), u.known.begin(), u.known.end(),
                          std::back_inserter(both));
    if (!both.empty()) throw InvalidParameter("ICP: want and known sets must be disjoint");
  }
  return IcpInstance{n_messages, std::move(users), std::move(labels)};
}

std::vector<char> IcpInstance::known_mask(int user) const {
  std::vector<char> mask(n_messages, 0);
  for (int m : users.at(user).known) mask[m] = 1;
  return mask;
}

StructuredIcpDesc StructuredIcpDesc::make(int a1, int a2, int z) {
  if (a1 < 0 || a2 < 0) throw InvalidParameter("descriptor: a1, a2 must be non-negative");
  if (z < 1) throw InvalidParameter("descriptor: z must be >= 1");
  return StructuredIcpDesc{a1, a2, z};
}

UnionIcpDesc UnionIcpDesc::make(int a1, int a2, int z) {
  if (a1 < 0 || a2 < 0) throw InvalidParameter("descriptor: a1, a2 must be non-negative");
  if (a2 > a1) throw InvalidParameter("union descriptor: requires a2 <= a1");
  if (z < 1) throw InvalidParameter("descriptor: z must be >= 1");
  return UnionIcpDesc{a1, a2, z};
}

IcpInstance realize_single(const StructuredIcpDesc& desc) {
  const int K = desc.K();
  std::vector<IcpUser> users(K);
  for (int k = 1; k <= K; ++k) {
    users[k - 1].want = {k - 1};
    for (int r = 1; r <= desc.z; ++r) users[k - 1].known.push_back(mod1(k + desc.a1 + r, K) - 1);
  }
  return IcpInstance::make(K, std::move(users));
}

IcpInstance realize_union(const UnionIcpDesc& desc) {
  const int K = desc.K();
  const int shift[2] = {desc.a1, desc.a2};
  std::vector<IcpUser> users(K);
  for (int k = 1; k <= K; ++k) {
    auto& u = users[k - 1];
    u.want = {2 * (k - 1), 2 * (k - 1) + 1};
    for (int t = 0; t < 2; ++t)
      for (int r = 1; r <= desc.z; ++r) u.known.push_back(2 * (mod1(k + shift[t] + r, K) - 1) + t);
  }
  return IcpInstance::make(2 * K, std::move(users));
}

IcpInstance split_messages(const IcpInstance& icp, int parts) {
  if (parts < 1) throw InvalidParameter("split_messages: parts must be >= 1");
  if (parts == 1) return icp;
  auto expand = [parts](const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size() * parts);
    for (int m : v)
      for (int s = 0; s < parts; ++s) out.push_back(m * parts + s);
    return out;
  };
  std::vector<IcpUser> users;
  users.reserve(icp.users.size());
  for (const auto& u : icp.users) users.push_back({expand(u.want), expand(u.known)});
  std::vector<std::string> labels;
  if (!icp.labels.empty())
    for (const auto& l : icp.labels)
      for (int s = 0; s < parts; ++s) labels.push_back(l + "#" + std::to_string(s + 1));
  return IcpInstance::make(icp.n_messages * parts, std::move(users), std::move(labels));
}

IcpTable reduce_macc(const MaccInstance& instance, const DemandProfile& demands) {
  const int K = instance.K();
  if (static_cast<int>(demands.demands.size()) != K)
    throw InvalidParameter("reduce_macc: demand profile size must equal K");
  IcpTable table;
  table.rows = K;
  table.coverage = std::min(instance.coverage(), K);
  if (instance.fully_covered()) return table;
  if (instance.i() < 1)
    throw InvalidParameter("reduce_macc: requires i >= 1 (i = 0 is the uncoded corner)");

  const int iL = instance.coverage();
  table.cols = K - iL;
  table.node_message.resize(static_cast<std::size_t>(K) * table.cols);
  std::map<std::pair<int, int>, int> ids;  // (file, interval start) -> message
  for (int p = 1; p <= K; ++p) {
    for (int q = 1; q <= table.cols; ++q) {
      SubfileKey key{demands(p), CircInterval{mod1(p + q, K), iL}};
      auto [it, inserted] = ids.try_emplace({key.file, key.users.first}, table.n_messages());
      if (inserted) table.messages.push_back(key);
      table.node_message[(p - 1) * table.cols + (q - 1)] = it->second;
    }
  }
  for (int q = 1; q <= table.cols; ++q)
    table.column_descs.push_back(StructuredIcpDesc::make(K - iL - q, q - 1, iL));
  return table;
}

IcpInstance as_icp(const IcpTable& table) {
  if (table.empty()) return IcpInstance{};
  const int K = table.rows;
  std::vector<IcpUser> users;
  users.reserve(static_cast<std::size_t>(K) * table.cols);
  std::vector<std::string> labels;
  for (const auto& key : table.messages) labels.push_back(subfile_label(key, K));
  for (int p = 1; p <= K; ++p) {
    std::vector<int> readable;
    for (int m = 0; m < table.n_messages(); ++m)
      if (table.messages[m].users.contains(p, K)) readable.push_back(m);
    for (int q = 1; q <= table.cols; ++q) users.push_back({{table.node(p, q)}, readable});
  }
  return IcpInstance::make(table.n_messages(), std::move(users), std::move(labels));
}

ColumnPairing pair_columns(const IcpTable& table) {
  ColumnPairing out;
  if (table.empty()) return out;
  const int deficit = table.cols, z = table.coverage;
  for (int j = 1; 2 * j <= deficit; ++j) {
    out.pairs.emplace_back(j, deficit - j + 1);
    out.union_descs.push_back(UnionIcpDesc::make(deficit - j, j - 1, z));
  }
  if (deficit % 2 == 1) {
    const int c = (deficit + 1) / 2;
    out.middle_column = c;
    out.middle_desc = StructuredIcpDesc::make(c - 1, c - 1, z);
  }
  return out;
}

BlockIcp block_icp(const IcpTable& table, const std::vector<int>& columns, int halves) {
  if (table.empty()) throw InvalidParameter("block_icp: empty table");
  if (columns.empty() || halves < 1) throw InvalidParameter("block_icp: bad block shape");
  const int K = table.rows;
  const int slots = static_cast<int>(columns.size()) * halves;

  BlockIcp block;
  std::map<std::pair<int, int>, int> ids;  // (table message, half) -> block message
  block.node_to_message.resize(static_cast<std::size_t>(K) * slots);
  std::vector<IcpUser> users(K);
  std::vector<std::string> labels;
  for (int p = 1; p <= K; ++p) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (int h = 0; h < halves; ++h) {
        const int tm = table.node(p, columns[c]);
        auto [it, inserted] = ids.try_emplace({tm, h}, static_cast<int>(block.table_message.size()));
        if (inserted) {
          block.table_message.push_back(tm);
          block.half.push_back(h);
          auto label = subfile_label(table.messages[tm], K);
          if (halves > 1) label += "/" + std::to_string(h + 1);
          labels.push_back(std::move(label));
        }
        block.node_to_message[(p - 1) * slots + c * halves + h] = it->second;
        users[p - 1].want.push_back(it->second);
      }
    }
  }
  const int n = static_cast<int>(block.table_message.size());
  for (int p = 1; p <= K; ++p)
    for (int m = 0; m < n; ++m)
      if (table.messages[block.table_message[m]].users.contains(p, K)) users[p - 1].known.push_back(m);
  block.icp = IcpInstance::make(n, std::move(users), std::move(labels));
  return block;
}

std::string subfile_label(const SubfileKey& key, int K) {
  return "F_{" + std::to_string(key.file) + ",[" + std::to_string(key.users.first) + ":" +
         std::to_string(key.users.last(K)) + "]}";
}

}  // namespace macc
