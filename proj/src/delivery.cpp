#include "macc/delivery.hpp"

#include <numeric>

namespace macc {

namespace {

const GaloisField& pick_field(int n_colors, const AssembleOptions& options) {
  if (options.field_degree) return GaloisField::get(*options.field_degree);
  return GaloisField::for_colors(n_colors);
}

/// Virtual scheme over the distinct-demand structure, then columns of nodes
/// holding the same actual message are added up.
DeliveryBlock finish_block(const IcpTable& table, DeliveryBlock b, std::optional<int> rows,
                           const AssembleOptions& options) {
  const int K = table.rows;
  const GaloisField& field = pick_field(b.coloring.n_colors, options);
  const TransmissionScheme virt = encode(b.virtual_icp, b.coloring, field, rows);

  b.block = block_icp(table, b.columns, b.pieces);
  const int n = b.block.icp.n_messages;
  b.scheme.field = virt.field;
  b.scheme.split_factor = b.pieces;
  b.scheme.coefficients = GfMatrix::Zero(virt.n_transmissions(), n);
  for (std::size_t v = 0; v < b.block.node_to_message.size(); ++v) {
    const int m = b.block.node_to_message[v];
    for (int r = 0; r < virt.n_transmissions(); ++r) b.scheme.coefficients(r, m) ^= virt.coefficients(r, v);
  }
  for (int m = 0; m < n; ++m) b.scheme.message_order.push_back({m, b.block.half[m], b.block.icp.labels[m]});
  b.piece_size = Rational(1, static_cast<std::int64_t>(K) * b.pieces);
  return b;
}

DeliveryBlock cyclic_pair(const IcpTable& table, std::vector<int> columns, const UnionIcpDesc& d, int X,
                          int pieces, bool all_colors, const AssembleOptions& options) {
  DeliveryBlock b;
  b.columns = std::move(columns);
  b.pieces = pieces;
  b.construction = "cyclic(" + std::to_string(X) + ")";
  b.union_desc = d;
  b.virtual_icp = realize_union(d);
  b.coloring = colorize_cyclic(d, X);
  return finish_block(table, std::move(b), all_colors ? std::optional<int>(X) : std::nullopt, options);
}

DeliveryBlock split_pair(const IcpTable& table, std::vector<int> columns, const UnionIcpDesc& d, int halves,
                         const AssembleOptions& options) {
  auto sc = colorize_split_chain(d);
  DeliveryBlock b;
  b.columns = std::move(columns);
  b.pieces = halves * sc.split_factor;
  b.construction = "split-chain";
  b.union_desc = d;
  b.virtual_icp = split_messages(realize_union(d), sc.split_factor);
  b.coloring = std::move(sc.coloring);
  return finish_block(table, std::move(b), std::nullopt, options);
}

DeliveryBlock single_column(const IcpTable& table, int column, const StructuredIcpDesc& d, std::string tag,
                            const AssembleOptions& options) {
  DeliveryBlock b;
  b.columns = {column};
  b.construction = std::move(tag);
  b.single_desc = d;
  b.virtual_icp = realize_single(d);
  b.coloring = b.construction == "clique" ? Coloring::uniform(d.K()) : greedy_coloring(b.virtual_icp);
  return finish_block(table, std::move(b), std::nullopt, options);
}

UnionIcpDesc self_union(const StructuredIcpDesc& d) { return UnionIcpDesc::make(d.a1, d.a2, d.z); }

}  // namespace

DeliveryMode parse_mode(const std::string& name) {
  if (name == "linear") return DeliveryMode::linear;
  if (name == "quadratic") return DeliveryMode::quadratic;
  if (name == "divisor") return DeliveryMode::divisor;
  throw InvalidParameter("unknown delivery mode '" + name + "' (linear, quadratic, divisor)");
}

std::string to_string(DeliveryMode mode) {
  switch (mode) {
    case DeliveryMode::linear: return "linear";
    case DeliveryMode::quadratic: return "quadratic";
    case DeliveryMode::divisor: return "divisor";
  }
  return "?";
}

int DeliveryPlan::n_transmissions() const {
  int n = 0;
  for (const auto& b : blocks) n += b.scheme.n_transmissions();
  return n;
}

DeliveryPlan assemble(const MaccInstance& instance, const DemandProfile& demands, DeliveryMode mode,
                      const AssembleOptions& options) {
  if (static_cast<int>(demands.demands.size()) != instance.K())
    throw InvalidParameter("assemble: demand profile size must equal K");
  DeliveryPlan plan{instance, demands, mode, std::nullopt, {}, {}, Rational(0), instance.K()};
  if (options.n_colors && mode != DeliveryMode::divisor)
    throw InvalidParameter("assemble: X only applies to divisor mode");
  if (instance.fully_covered()) return plan;
  if (instance.i() < 1) throw InvalidParameter("assemble: requires i >= 1");

  const int K = instance.K(), D = instance.deficit(), S = D + 1;
  plan.table = reduce_macc(instance, demands);
  const auto pairing = pair_columns(plan.table);

  std::optional<int> X;
  if (mode == DeliveryMode::divisor) {
    X = options.n_colors ? options.n_colors : smallest_divisor_at_least(K, S);
    if (*X < S || K % *X != 0) throw InvalidParameter("divisor mode: X must satisfy X >= K-iL+1 and X | K");
    plan.n_colors = X;
  }

  if (D == 1 && mode != DeliveryMode::divisor) {
    plan.blocks.push_back(single_column(plan.table, 1, plan.table.column_descs[0], "clique", options));
  } else if (mode == DeliveryMode::divisor) {
    for (std::size_t j = 0; j < pairing.pairs.size(); ++j)
      plan.blocks.push_back(cyclic_pair(plan.table, {pairing.pairs[j].first, pairing.pairs[j].second},
                                        pairing.union_descs[j], *X, 1, true, options));
    if (pairing.middle_column)
      plan.blocks.push_back(cyclic_pair(plan.table, {*pairing.middle_column}, self_union(*pairing.middle_desc),
                                        *X, 2, true, options));
  } else if (mode == DeliveryMode::linear || K % S == 0) {
    const int xmin = *smallest_divisor_at_least(K, S);
    for (std::size_t j = 0; j < pairing.pairs.size(); ++j)
      plan.blocks.push_back(cyclic_pair(plan.table, {pairing.pairs[j].first, pairing.pairs[j].second},
                                        pairing.union_descs[j], xmin, 1, false, options));
    if (pairing.middle_column) {
      auto halved = cyclic_pair(plan.table, {*pairing.middle_column}, self_union(*pairing.middle_desc), xmin, 2,
                                false, options);
      if (mode == DeliveryMode::quadratic) {
        plan.blocks.push_back(std::move(halved));
      } else {
        auto whole = single_column(plan.table, *pairing.middle_column, *pairing.middle_desc, "greedy", options);
        plan.blocks.push_back(whole.load() <= halved.load() ? std::move(whole) : std::move(halved));
      }
    }
  } else {
    for (std::size_t j = 0; j < pairing.pairs.size(); ++j)
      plan.blocks.push_back(
          split_pair(plan.table, {pairing.pairs[j].first, pairing.pairs[j].second}, pairing.union_descs[j], 1, options));
    if (pairing.middle_column)
      plan.blocks.push_back(
          split_pair(plan.table, {*pairing.middle_column}, self_union(*pairing.middle_desc), 2, options));
  }

  std::int64_t base = K, split = 1;
  for (const auto& b : plan.blocks) {
    plan.rate += b.load();
    const int halves = b.columns.size() == 1 && b.union_desc ? 2 : 1;
    if (halves == 2) base = K + 1;
    split = std::lcm(split, static_cast<std::int64_t>(b.pieces / halves));
  }
  plan.subpacketization = base * split;
  return plan;
}

VerificationReport verify_plan(const DeliveryPlan& plan) {
  VerificationReport rep;
  const int K = plan.instance.K();
  rep.user_ok.assign(K, true);
  rep.rate = plan.rate;
  rep.subpacketization = plan.subpacketization;
  rep.n_transmissions = plan.n_transmissions();

  std::vector<int> served(plan.table.cols + 1, 0);
  Rational rate(0);
  for (const auto& b : plan.blocks) {
    for (int c : b.columns)
      if (c >= 1 && c <= plan.table.cols) ++served[c];
    rate += b.load();
    const auto ok = decode_all(b.scheme, b.block.icp);
    for (int p = 0; p < K; ++p) rep.user_ok[p] = rep.user_ok[p] && ok[p];
  }
  rep.columns_covered = true;
  for (int c = 1; c <= plan.table.cols; ++c) rep.columns_covered = rep.columns_covered && served[c] == 1;
  rep.all_ok = rep.columns_covered && rate == plan.rate;
  for (bool u : rep.user_ok) rep.all_ok = rep.all_ok && u;
  return rep;
}

}  // namespace macc
