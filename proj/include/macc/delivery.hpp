#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macc/coloring.hpp"
#include "macc/icp.hpp"
#include "macc/linalg.hpp"
#include "macc/macc.hpp"
#include "macc/rates.hpp"

namespace macc {

/// linear: F = K or K+1, cyclic colorings with the smallest usable divisor.
/// quadratic: split-chain colorings, F up to (K+1) floor(K/(K-iL+1)).
/// divisor: cyclic colorings with a fixed X, rate (K-iL)X/(2K).
enum class DeliveryMode { linear, quadratic, divisor };

DeliveryMode parse_mode(const std::string& name);
std::string to_string(DeliveryMode mode);

/// One group of table columns delivered by its own transmission scheme.
struct DeliveryBlock {
  std::vector<int> columns;  ///< 1-based table columns
  int pieces = 1;            ///< pieces per table message inside the block
  std::string construction;  ///< "cyclic(X)", "split-chain", "greedy" or "clique"
  std::optional<UnionIcpDesc> union_desc;
  std::optional<StructuredIcpDesc> single_desc;

  IcpInstance virtual_icp;  ///< distinct-demand structure the coloring lives on
  Coloring coloring;        ///< over virtual_icp messages
  BlockIcp block;           ///< actual (deduplicated) messages of the block
  TransmissionScheme scheme;  ///< over block.icp messages
  Rational piece_size;        ///< fraction of a file per piece

  Rational load() const { return piece_size * scheme.n_transmissions(); }
};

struct DeliveryPlan {
  MaccInstance instance;
  DemandProfile demands;
  DeliveryMode mode = DeliveryMode::linear;
  std::optional<int> n_colors;  ///< X for divisor mode
  IcpTable table;
  std::vector<DeliveryBlock> blocks;
  Rational rate;
  std::int64_t subpacketization = 1;

  int n_transmissions() const;
};

struct AssembleOptions {
  std::optional<int> n_colors;      ///< X for divisor mode; default smallest usable
  std::optional<int> field_degree;  ///< default: 8, or 16 above 255 colors
};

/// Builds and encodes the delivery for one demand profile. Throws
/// InvalidParameter on bad parameters (i = 0 or an unusable X).
DeliveryPlan assemble(const MaccInstance& instance, const DemandProfile& demands, DeliveryMode mode,
                      const AssembleOptions& options = {});

struct VerificationReport {
  std::vector<bool> user_ok;     ///< [p-1]: user p decodes every needed subfile
  bool columns_covered = false;  ///< every table column served exactly once
  bool all_ok = false;
  Rational rate;
  std::int64_t subpacketization = 1;
  int n_transmissions = 0;
};

/// Re-decodes every block for every user by linear algebra over the field.
VerificationReport verify_plan(const DeliveryPlan& plan);

}  // namespace macc
