#include "kernels_impl.hpp"

#if INVSR_KERNELS_NEON

#include <arm_neon.h>

// vqtbl1q_u8 returns 0 for indices >= 16, which matches the padded-zero
// lanes the x86 variants rely on. Indices here are always < n <= 16.

namespace invsr::kernels::detail {
namespace {

inline uint8x16_t load_partial(const std::uint8_t* p, std::size_t n) {
  alignas(16) std::uint8_t buf[16] = {};
  __builtin_memcpy(buf, p, n);
  return vld1q_u8(buf);
}

inline uint8x16_t load_row(const std::uint8_t* table, std::size_t stride,
                           std::size_t r) {
  return vld1q_u8(table + r * stride);
}

inline void store_partial(std::uint8_t* out, uint8x16_t v, std::size_t n) {
  alignas(16) std::uint8_t buf[16];
  vst1q_u8(buf, v);
  __builtin_memcpy(out, buf, n);
}

// Index of the first lane < n where `eq` is zero, or n.
inline std::size_t first_mismatch(uint8x16_t eq, std::size_t n) {
  if (vminvq_u8(eq) == 0xFF) {
    return n;
  }
  alignas(16) std::uint8_t buf[16];
  vst1q_u8(buf, eq);
  for (std::size_t lane = 0; lane < n; ++lane) {
    if (buf[lane] == 0) {
      return lane;
    }
  }
  return n;
}

}  // namespace

void compose_neon(const std::uint8_t* f, const std::uint8_t* g,
                  std::uint8_t* out, std::size_t n) {
  store_partial(out, vqtbl1q_u8(load_partial(f, n), load_partial(g, n)), n);
}

void pointwise_neon(const std::uint8_t* table, std::size_t stride,
                    const std::uint8_t* f, const std::uint8_t* g,
                    std::uint8_t* out, std::size_t n) {
  const uint8x16_t vf = load_partial(f, n);
  const uint8x16_t vg = load_partial(g, n);
  uint8x16_t acc = vdupq_n_u8(0);
  for (std::size_t r = 0; r < n; ++r) {
    const uint8x16_t vals = vqtbl1q_u8(load_row(table, stride, r), vg);
    const uint8x16_t hit = vceqq_u8(vf, vdupq_n_u8(static_cast<std::uint8_t>(r)));
    acc = vorrq_u8(acc, vandq_u8(hit, vals));
  }
  store_partial(out, acc, n);
}

bool hom_violation_neon(const std::uint8_t* table, std::size_t stride,
                        const std::uint8_t* f, std::size_t n, std::size_t* x,
                        std::size_t* y) {
  const uint8x16_t vf = load_partial(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    const uint8x16_t lhs = vqtbl1q_u8(vf, load_row(table, stride, i));
    const uint8x16_t rhs = vqtbl1q_u8(load_row(table, stride, f[i]), vf);
    const std::size_t lane = first_mismatch(vceqq_u8(lhs, rhs), n);
    if (lane < n) {
      *x = i;
      *y = lane;
      return true;
    }
  }
  return false;
}

bool assoc_violation_neon(const std::uint8_t* table, std::size_t stride,
                          std::size_t n, std::size_t* i, std::size_t* j,
                          std::size_t* k) {
  for (std::size_t a = 0; a < n; ++a) {
    const uint8x16_t row_a = load_row(table, stride, a);
    for (std::size_t b = 0; b < n; ++b) {
      const uint8x16_t lhs = load_row(table, stride, table[a * stride + b]);
      const uint8x16_t rhs = vqtbl1q_u8(row_a, load_row(table, stride, b));
      const std::size_t lane = first_mismatch(vceqq_u8(lhs, rhs), n);
      if (lane < n) {
        *i = a;
        *j = b;
        *k = lane;
        return true;
      }
    }
  }
  return false;
}

}  // namespace invsr::kernels::detail

#endif  // INVSR_KERNELS_NEON
