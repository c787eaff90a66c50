#pragma once

#include <optional>
#include <string>
#include <vector>

#include "macc/coloring.hpp"
#include "macc/galois.hpp"
#include "macc/icp.hpp"

namespace macc {

/// Row rank by Gaussian elimination over `field`.
int rank(GfMatrix matrix, const GaloisField& field);

/// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> row_reduce(GfMatrix& matrix, const GaloisField& field);

/// rows x cols Vandermonde matrix G(r, c) = alpha_c^r over distinct points
/// alpha_c = c; every rows x rows column subset is invertible.
GfMatrix mds_generator(int rows, int cols, const GaloisField& field);

/// Broadcast of `n_transmissions` coded symbols over the ordered messages.
struct TransmissionScheme {
  struct MessageRef {
    int message = 0;  ///< message index in the ICP the scheme serves
    int part = 0;     ///< piece index when messages were split
    std::string label;
  };

  FieldSpec field;
  std::vector<MessageRef> message_order;
  GfMatrix coefficients;  ///< n_transmissions x message_order.size()
  int split_factor = 1;

  int n_transmissions() const { return static_cast<int>(coefficients.rows()); }
};

/// Color-class MDS precoding: transmission r carries G(r, color(v)) * x_v.
/// `rows` defaults to local_count(icp, coloring) and may be raised up to the
/// number of colors.
TransmissionScheme encode(const IcpInstance& icp, const Coloring& coloring, const GaloisField& field,
                          std::optional<int> rows = std::nullopt);

/// True iff every wanted unit vector lies in the span of the transmissions
/// once the user's known coordinates are cancelled.
bool can_decode(const TransmissionScheme& scheme, const IcpInstance& icp, int user);

/// can_decode for every user.
std::vector<bool> decode_all(const TransmissionScheme& scheme, const IcpInstance& icp);

}  // namespace macc
