#include "macc/linalg.hpp"

#include <algorithm>
#include <map>

namespace macc {

std::vector<int> row_reduce(GfMatrix& a, const GaloisField& f) {
  std::vector<int> pivots;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const GfElement scale = f.inv(a(r, c));
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), scale);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const GfElement factor = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) ^= f.mul(factor, a(r, j));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(GfMatrix matrix, const GaloisField& field) {
  return static_cast<int>(row_reduce(matrix, field).size());
}

GfMatrix mds_generator(int rows, int cols, const GaloisField& field) {
  if (rows < 0 || cols < 0 || rows > cols)
    throw InvalidParameter("mds_generator: need 0 <= rows <= cols");
  if (static_cast<std::uint32_t>(cols) > field.size())
    throw InvalidParameter("mds_generator: field GF(2^" + std::to_string(field.degree()) +
                           ") has fewer than " + std::to_string(cols) +
                           " elements; use a larger field degree");
  GfMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) g(r, c) = field.pow(static_cast<GfElement>(c), r);
  return g;
}

TransmissionScheme encode(const IcpInstance& icp, const Coloring& coloring, const GaloisField& field,
                          std::optional<int> rows) {
  if (!is_proper(icp, coloring)) throw InvalidParameter("encode: coloring is not proper");
  const int needed = icp.empty() ? 0 : local_count(icp, coloring);
  const int n_rows = rows.value_or(needed);
  if (n_rows < needed || n_rows > coloring.n_colors)
    throw InvalidParameter("encode: transmissions must lie between the local count and the color count");

  const GfMatrix g = mds_generator(n_rows, coloring.n_colors, field);
  TransmissionScheme scheme;
  scheme.field = field.spec();
  scheme.coefficients.resize(n_rows, icp.n_messages);
  for (int v = 0; v < icp.n_messages; ++v) {
    scheme.coefficients.col(v) = g.col(coloring[v] - 1);
    scheme.message_order.push_back(
        {v, 0, icp.labels.empty() ? std::string{} : icp.labels[static_cast<std::size_t>(v)]});
  }
  return scheme;
}

bool can_decode(const TransmissionScheme& scheme, const IcpInstance& icp, int user) {
  if (scheme.coefficients.cols() != icp.n_messages)
    throw InvalidParameter("can_decode: scheme does not cover the instance");
  const auto& want = icp.users.at(user).want;
  if (want.empty()) return true;
  const GaloisField& field = GaloisField::get(scheme.field.degree);
  const auto known = icp.known_mask(user);
  const Eigen::Index n_tx = scheme.coefficients.rows();

  // Wanted x is recoverable iff its column is not in the span of the other
  // unknown columns. Identical columns are grouped first; a group is
  // recoverable iff it has multiplicity one and is a coloop of the distinct
  // column set, i.e. its unit vector is a row of the reduced echelon form.
  using Column = std::vector<GfElement>;
  std::map<Column, std::pair<int, int>> groups;  // column -> (count, group id)
  std::vector<int> group_of(icp.n_messages, -1);
  std::vector<const Column*> distinct;
  for (int m = 0; m < icp.n_messages; ++m) {
    if (known[m]) continue;
    Column col(n_tx);
    bool zero = true;
    for (Eigen::Index r = 0; r < n_tx; ++r) {
      col[r] = scheme.coefficients(r, m);
      zero = zero && col[r] == 0;
    }
    if (zero) continue;
    auto [it, inserted] = groups.try_emplace(std::move(col), 0, static_cast<int>(distinct.size()));
    if (inserted) distinct.push_back(&it->first);
    ++it->second.first;
    group_of[m] = it->second.second;
  }

  GfMatrix basis(n_tx, static_cast<Eigen::Index>(distinct.size()));
  for (std::size_t g = 0; g < distinct.size(); ++g)
    for (Eigen::Index r = 0; r < n_tx; ++r) basis(r, g) = (*distinct[g])[r];
  const auto pivots = row_reduce(basis, field);
  std::vector<char> coloop(distinct.size(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    int nonzeros = 0;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) nonzeros += basis(r, c) != 0;
    if (nonzeros == 1) coloop[pivots[r]] = 1;
  }

  for (int x : want) {
    const int g = group_of[x];
    if (g < 0) return false;
    Column col(n_tx);
    for (Eigen::Index r = 0; r < n_tx; ++r) col[r] = scheme.coefficients(r, x);
    if (groups.at(col).first != 1 || !coloop[g]) return false;
  }
  return true;
}

std::vector<bool> decode_all(const TransmissionScheme& scheme, const IcpInstance& icp) {
  std::vector<bool> out(icp.n_users());
  for (int u = 0; u < icp.n_users(); ++u) out[u] = can_decode(scheme, icp, u);
  return out;
}

}  // namespace macc
