#include "macc/galois.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "macc/macc.hpp"

namespace macc {

namespace {

constexpr std::array<std::uint32_t, 17> kPrimitive = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x89,   0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b};

}  // namespace

FieldSpec FieldSpec::for_degree(int degree) {
  if (degree < 1 || degree > 16)
    throw InvalidParameter("field degree must lie in [1, 16] (got " + std::to_string(degree) + ")");
  return FieldSpec{degree, kPrimitive[degree]};
}

GaloisField::GaloisField(int degree) : spec_(FieldSpec::for_degree(degree)) {
  const std::uint32_t q = spec_.size(), order = q - 1;
  exp_.assign(2 * static_cast<std::size_t>(q), 0);
  log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t e = 0; e < order; ++e) {
    exp_[e] = static_cast<GfElement>(x);
    if (e > 0 && x == 1) throw std::logic_error("reduction polynomial is not primitive");
    log_[x] = e;
    x <<= 1;
    if (x & q) x ^= spec_.polynomial;
  }
  for (std::uint32_t e = order; e < exp_.size(); ++e) exp_[e] = exp_[e - order];
}

const GaloisField& GaloisField::get(int degree) {
  FieldSpec::for_degree(degree);  // validates
  static std::array<std::unique_ptr<GaloisField>, 17> fields;
  static std::array<std::once_flag, 17> once;
  std::call_once(once[degree], [degree] { fields[degree].reset(new GaloisField(degree)); });
  return *fields[degree];
}

const GaloisField& GaloisField::for_colors(int n_colors) {
  return get(n_colors > 255 ? 16 : 8);
}

GfElement GaloisField::inv(GfElement a) const {
  if (a == 0) throw std::domain_error("GF inverse of zero");
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

GfElement GaloisField::pow(GfElement a, unsigned e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint32_t order = size() - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % order];
}

}  // namespace macc
