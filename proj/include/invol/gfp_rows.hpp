#pragma once

#include <cstddef>
#include <cstdint>

namespace invol::gfp {

// Row kernels for Gaussian elimination over GF(p). Entries are residues in
// [0, p). Two implementations exist: a scalar reference and a vectorized lane
// built on std::experimental::simd doubles, exact while p < 2^26 (products
// stay below 2^52). The active lane is chosen once at startup from CPU
// capabilities; set INVOL_SIMD=scalar or INVOL_SIMD=simd to force one.
struct RowOps {
  // y[i] = (y[i] + c * x[i]) mod p
  void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
               std::size_t n, std::uint32_t p);
  // y[i] = (c * y[i]) mod p
  void (*scale)(std::uint32_t* y, std::uint32_t c, std::size_t n,
                std::uint32_t p);
  const char* name;
};

// Largest modulus the vector lane handles exactly.
inline constexpr std::uint32_t kSimdModulusLimit = (1u << 26) - 1;

const RowOps& scalar_ops();
// Null when the vector lane cannot run on this CPU.
const RowOps* simd_ops();
const RowOps& active_ops();

}  // namespace invol::gfp
