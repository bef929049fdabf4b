// Compiled with -mavx2 on x86-64; gfp_rows.cpp only hands out these kernels
// after checking CPU support at runtime. Keep this TU free of dynamic
// initializers so nothing here executes before that check.
#include "invol/gfp_rows.hpp"

#include <experimental/simd>

namespace stdx = std::experimental;

namespace invol::gfp {

namespace {

using vd = stdx::native_simd<double>;

// Reduce t mod p where 0 <= t < 2^52: a floor-based quotient can be off by
// one in either direction, so correct twice.
inline vd reduce(vd t, double p, double pinv) {
  vd q = stdx::floor(t * pinv);
  vd r = t - q * p;
  where(r < 0.0, r) += p;
  where(r >= p, r) -= p;
  return r;
}

void axpy_simd(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
               std::size_t n, std::uint32_t p) {
  const double cd = c, pd = p, pinv = 1.0 / pd;
  const std::size_t lanes = vd::size();
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    vd xv([&](auto k) { return static_cast<double>(x[i + k]); });
    vd yv([&](auto k) { return static_cast<double>(y[i + k]); });
    vd r = reduce(yv + xv * cd, pd, pinv);
    for (std::size_t k = 0; k < lanes; ++k)
      y[i + k] = static_cast<std::uint32_t>(r[k]);
  }
  const std::uint64_t cc = c, pp = p;
  for (; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % pp);
}

void scale_simd(std::uint32_t* y, std::uint32_t c, std::size_t n,
                std::uint32_t p) {
  const double cd = c, pd = p, pinv = 1.0 / pd;
  const std::size_t lanes = vd::size();
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    vd yv([&](auto k) { return static_cast<double>(y[i + k]); });
    vd r = reduce(yv * cd, pd, pinv);
    for (std::size_t k = 0; k < lanes; ++k)
      y[i + k] = static_cast<std::uint32_t>(r[k]);
  }
  const std::uint64_t cc = c, pp = p;
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>(cc * y[i] % pp);
}

constexpr RowOps kSimdOps{axpy_simd, scale_simd, "simd"};

}  // namespace

namespace detail {
const RowOps* simd_ops_impl() { return &kSimdOps; }
}  // namespace detail

}  // namespace invol::gfp
