#include "invol/gfp_rows.hpp"

#include <cstdlib>
#include <cstring>

namespace invol::gfp {

namespace detail {
const RowOps* simd_ops_impl();
}

namespace {

bool cpu_supports_vector_lane() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  // Non-x86 builds compile the lane without extra ISA flags, so whatever the
  // baseline target supports is safe to run.
  return true;
#endif
}

const RowOps* pick_active() {
  const char* env = std::getenv("INVOL_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
  const RowOps* vec = simd_ops();
  if (env && std::strcmp(env, "simd") == 0 && !vec)
    return &scalar_ops();  // requested but unavailable: fall back
  return vec ? vec : &scalar_ops();
}

}  // namespace

const RowOps* simd_ops() {
  return cpu_supports_vector_lane() ? detail::simd_ops_impl() : nullptr;
}

const RowOps& active_ops() {
  static const RowOps* active = pick_active();
  return *active;
}

}  // namespace invol::gfp
