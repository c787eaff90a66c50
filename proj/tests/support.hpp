#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls the library's field arithmetic or elimination routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "macc/icp.hpp"
#include "macc/linalg.hpp"

namespace macc::oracle_ref {

inline std::uint32_t ref_mul(std::uint32_t a, std::uint32_t b, int degree, std::uint32_t poly) {
  std::uint32_t acc = 0;
  for (int bit = 0; bit < degree; ++bit)
    if (b >> bit & 1) acc ^= a << bit;
  for (int bit = 2 * degree - 2; bit >= degree; --bit)
    if (acc >> bit & 1) acc ^= poly << (bit - degree);
  return acc;
}

class RefField {
 public:
  explicit RefField(const FieldSpec& spec) : spec_(spec) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return ref_mul(a, b, spec_.degree, spec_.polynomial); }
  std::uint32_t inv(std::uint32_t a) const {
    auto it = inverse_.find(a);
    if (it != inverse_.end()) return it->second;
    for (std::uint32_t b = 1; b < spec_.size(); ++b)
      if (mul(a, b) == 1) return inverse_[a] = b;
    return 0;
  }

  /// Rank of a dense matrix given as rows.
  int rank(std::vector<std::vector<std::uint32_t>> m) const {
    int r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
      std::size_t p = r;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      const std::uint32_t s = inv(m[r][c]);
      for (auto& x : m[r]) x = mul(x, s);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(i) == r || m[i][c] == 0) continue;
        const std::uint32_t f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= mul(f, m[r][j]);
      }
      ++r;
    }
    return r;
  }

 private:
  FieldSpec spec_;
  mutable std::map<std::uint32_t, std::uint32_t> inverse_;
};

/// A user decodes x iff the unit vector e_x lies in the row space of the
/// transmissions restricted to the messages the user lacks.
inline bool decodable_by_rank(const TransmissionScheme& s, const IcpInstance& icp, int user) {
  RefField f(s.field);
  const auto known = icp.known_mask(user);
  std::vector<int> unknown;
  for (int m = 0; m < icp.n_messages; ++m)
    if (!known[m]) unknown.push_back(m);
  std::vector<std::vector<std::uint32_t>> a;
  for (Eigen::Index r = 0; r < s.coefficients.rows(); ++r) {
    std::vector<std::uint32_t> row;
    for (int m : unknown) row.push_back(s.coefficients(r, m));
    a.push_back(std::move(row));
  }
  const int base = f.rank(a);
  for (int x : icp.users[user].want) {
    auto with = a;
    std::vector<std::uint32_t> unit(unknown.size(), 0);
    unit[std::find(unknown.begin(), unknown.end(), x) - unknown.begin()] = 1;
    with.push_back(unit);
    if (f.rank(with) != base) return false;
  }
  return true;
}

/// Random instance: every user wants 1..max_want messages and knows a random
/// subset of the rest.
inline IcpInstance random_icp(std::mt19937& rng, int n_messages, int n_users, int max_want = 1) {
  std::vector<IcpUser> users(n_users);
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& u : users) {
    std::vector<int> perm(n_messages);
    for (int m = 0; m < n_messages; ++m) perm[m] = m;
    std::shuffle(perm.begin(), perm.end(), rng);
    const int w = std::uniform_int_distribution<int>(1, std::min(max_want, n_messages))(rng);
    u.want.assign(perm.begin(), perm.begin() + w);
    for (int k = w; k < n_messages; ++k)
      if (coin(rng)) u.known.push_back(perm[k]);
  }
  return IcpInstance::make(n_messages, std::move(users));
}

}  // namespace macc::oracle_ref
