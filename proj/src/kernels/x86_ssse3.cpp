#include "kernels_impl.hpp"

#if INVSR_KERNELS_X86

#include <immintrin.h>

#define INVSR_TARGET __attribute__((target("ssse3")))

namespace invsr::kernels::detail {
namespace {

INVSR_TARGET inline __m128i load_partial(const std::uint8_t* p,
                                         std::size_t n) {
  alignas(16) std::uint8_t buf[16] = {};
  __builtin_memcpy(buf, p, n);
  return _mm_load_si128(reinterpret_cast<const __m128i*>(buf));
}

INVSR_TARGET inline __m128i load_row(const std::uint8_t* table,
                                     std::size_t stride, std::size_t r) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(table + r * stride));
}

INVSR_TARGET inline void store_partial(std::uint8_t* out, __m128i v,
                                       std::size_t n) {
  alignas(16) std::uint8_t buf[16];
  _mm_store_si128(reinterpret_cast<__m128i*>(buf), v);
  __builtin_memcpy(out, buf, n);
}

inline unsigned lane_mask(std::size_t n) {
  return n >= 16 ? 0xFFFFu : ((1u << n) - 1u);
}

}  // namespace

INVSR_TARGET void compose_ssse3(const std::uint8_t* f, const std::uint8_t* g,
                                std::uint8_t* out, std::size_t n) {
  const __m128i vf = load_partial(f, n);
  const __m128i vg = load_partial(g, n);
  store_partial(out, _mm_shuffle_epi8(vf, vg), n);
}

INVSR_TARGET void pointwise_ssse3(const std::uint8_t* table,
                                  std::size_t stride, const std::uint8_t* f,
                                  const std::uint8_t* g, std::uint8_t* out,
                                  std::size_t n) {
  const __m128i vf = load_partial(f, n);
  const __m128i vg = load_partial(g, n);
  __m128i acc = _mm_setzero_si128();
  // Lane x picks row f[x]: gather table(r, g[x]) for every r, keep where f[x] == r.
  for (std::size_t r = 0; r < n; ++r) {
    const __m128i vals = _mm_shuffle_epi8(load_row(table, stride, r), vg);
    const __m128i hit = _mm_cmpeq_epi8(vf, _mm_set1_epi8(static_cast<char>(r)));
    acc = _mm_or_si128(acc, _mm_and_si128(hit, vals));
  }
  store_partial(out, acc, n);
}

INVSR_TARGET bool hom_violation_ssse3(const std::uint8_t* table,
                                      std::size_t stride,
                                      const std::uint8_t* f, std::size_t n,
                                      std::size_t* x, std::size_t* y) {
  const __m128i vf = load_partial(f, n);
  const unsigned valid = lane_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    // lane j: f(i+j) vs f(i)+f(j)
    const __m128i lhs = _mm_shuffle_epi8(vf, load_row(table, stride, i));
    const __m128i rhs = _mm_shuffle_epi8(load_row(table, stride, f[i]), vf);
    const unsigned eq =
        static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(lhs, rhs)));
    const unsigned bad = ~eq & valid;
    if (bad != 0) {
      *x = i;
      *y = static_cast<std::size_t>(__builtin_ctz(bad));
      return true;
    }
  }
  return false;
}

INVSR_TARGET bool assoc_violation_ssse3(const std::uint8_t* table,
                                        std::size_t stride, std::size_t n,
                                        std::size_t* i, std::size_t* j,
                                        std::size_t* k) {
  const unsigned valid = lane_mask(n);
  for (std::size_t a = 0; a < n; ++a) {
    const __m128i row_a = load_row(table, stride, a);
    for (std::size_t b = 0; b < n; ++b) {
      // lane c: (a+b)+c vs a+(b+c)
      const __m128i lhs = load_row(table, stride, table[a * stride + b]);
      const __m128i rhs = _mm_shuffle_epi8(row_a, load_row(table, stride, b));
      const unsigned eq =
          static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(lhs, rhs)));
      const unsigned bad = ~eq & valid;
      if (bad != 0) {
        *i = a;
        *j = b;
        *k = static_cast<std::size_t>(__builtin_ctz(bad));
        return true;
      }
    }
  }
  return false;
}

}  // namespace invsr::kernels::detail

#endif  // INVSR_KERNELS_X86
