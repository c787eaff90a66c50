#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace macc {

using GfElement = std::uint16_t;

/// Dense matrix over GF(2^w); storage only, arithmetic goes through a field.
using GfMatrix = Eigen::Matrix<GfElement, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using GfVector = Eigen::Matrix<GfElement, Eigen::Dynamic, 1>;

/// Characteristic-2 field with 2^w elements, w in [1, 16].
struct FieldSpec {
  int degree = 8;
  std::uint32_t polynomial = 0x11d;  ///< primitive reduction polynomial incl. x^w

  static FieldSpec for_degree(int degree);
  std::uint32_t size() const { return 1u << degree; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// GF(2^w) via log/antilog tables. Instances returned by `get` are built once
/// and shared read-only.
class GaloisField {
 public:
  static const GaloisField& get(int degree);
  /// Default degree 8, promoted to 16 when more than 255 colors are needed.
  static const GaloisField& for_colors(int n_colors);

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return spec_.degree; }
  std::uint32_t size() const { return spec_.size(); }

  static GfElement add(GfElement a, GfElement b) { return a ^ b; }
  GfElement mul(GfElement a, GfElement b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  GfElement inv(GfElement a) const;
  GfElement div(GfElement a, GfElement b) const { return mul(a, inv(b)); }
  GfElement pow(GfElement a, unsigned e) const;

 private:
  explicit GaloisField(int degree);

  FieldSpec spec_;
  std::vector<GfElement> exp_;  // doubled so log a + log b never wraps
  std::vector<std::uint32_t> log_;
};

}  // namespace macc
