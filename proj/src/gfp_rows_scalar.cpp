#include "invol/gfp_rows.hpp"

namespace invol::gfp {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                 std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c, pp = p;
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % pp);
}

void scale_scalar(std::uint32_t* y, std::uint32_t c, std::size_t n,
                  std::uint32_t p) {
  const std::uint64_t cc = c, pp = p;
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>(cc * y[i] % pp);
}

}  // namespace

const RowOps& scalar_ops() {
  static const RowOps ops{axpy_scalar, scale_scalar, "scalar"};
  return ops;
}

}  // namespace invol::gfp
