#include "kernels_impl.hpp"

#if INVSR_KERNELS_X86

#include <immintrin.h>

#define INVSR_TARGET __attribute__((target("avx2")))

// Two table rows per 256-bit register, one per 128-bit lane. vpshufb
// shuffles within each lane, so a broadcast image vector is looked up by
// both rows at once.

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

INVSR_TARGET inline __m256i load_rows(const std::uint8_t* table,
                                      std::size_t stride, std::size_t lo,
                                      std::size_t hi) {
  return _mm256_inserti128_si256(
      _mm256_castsi128_si256(load_row(table, stride, lo)),
      load_row(table, stride, hi), 1);
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

// First violating lane of a two-row comparison, reported as (row, lane).
inline bool first_bad(unsigned eq32, unsigned valid, std::size_t row,
                      std::size_t* r, std::size_t* lane) {
  const unsigned lo_bad = ~eq32 & valid;
  if (lo_bad != 0) {
    *r = row;
    *lane = static_cast<std::size_t>(__builtin_ctz(lo_bad));
    return true;
  }
  const unsigned hi_bad = ~(eq32 >> 16) & valid;
  if (hi_bad != 0) {
    *r = row + 1;
    *lane = static_cast<std::size_t>(__builtin_ctz(hi_bad));
    return true;
  }
  return false;
}

}  // namespace

INVSR_TARGET void compose_avx2(const std::uint8_t* f, const std::uint8_t* g,
                               std::uint8_t* out, std::size_t n) {
  // One vector only; the VEX-encoded 128-bit shuffle is all there is to do.
  store_partial(out, _mm_shuffle_epi8(load_partial(f, n), load_partial(g, n)),
                n);
}

INVSR_TARGET void pointwise_avx2(const std::uint8_t* table,
                                 std::size_t stride, const std::uint8_t* f,
                                 const std::uint8_t* g, std::uint8_t* out,
                                 std::size_t n) {
  const __m128i vf = load_partial(f, n);
  const __m128i vg = load_partial(g, n);
  const __m256i vf2 = _mm256_broadcastsi128_si256(vf);
  const __m256i vg2 = _mm256_broadcastsi128_si256(vg);
  __m256i acc = _mm256_setzero_si256();
  std::size_t r = 0;
  for (; r + 1 < n; r += 2) {
    const __m256i vals = _mm256_shuffle_epi8(load_rows(table, stride, r, r + 1), vg2);
    const __m256i ids = _mm256_setr_m128i(_mm_set1_epi8(static_cast<char>(r)),
                                          _mm_set1_epi8(static_cast<char>(r + 1)));
    acc = _mm256_or_si256(acc, _mm256_and_si256(_mm256_cmpeq_epi8(vf2, ids), vals));
  }
  __m128i merged = _mm_or_si128(_mm256_castsi256_si128(acc),
                                _mm256_extracti128_si256(acc, 1));
  if (r < n) {
    const __m128i vals = _mm_shuffle_epi8(load_row(table, stride, r), vg);
    const __m128i hit = _mm_cmpeq_epi8(vf, _mm_set1_epi8(static_cast<char>(r)));
    merged = _mm_or_si128(merged, _mm_and_si128(hit, vals));
  }
  store_partial(out, merged, n);
}

INVSR_TARGET bool hom_violation_avx2(const std::uint8_t* table,
                                     std::size_t stride,
                                     const std::uint8_t* f, std::size_t n,
                                     std::size_t* x, std::size_t* y) {
  const __m128i vf = load_partial(f, n);
  const __m256i vf2 = _mm256_broadcastsi128_si256(vf);
  const unsigned valid = lane_mask(n);
  std::size_t i = 0;
  for (; i + 1 < n; i += 2) {
    const __m256i lhs = _mm256_shuffle_epi8(vf2, load_rows(table, stride, i, i + 1));
    const __m256i rhs =
        _mm256_shuffle_epi8(load_rows(table, stride, f[i], f[i + 1]), vf2);
    const unsigned eq =
        static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lhs, rhs)));
    if (first_bad(eq, valid, i, x, y)) {
      return true;
    }
  }
  if (i < n) {
    const __m128i lhs = _mm_shuffle_epi8(vf, load_row(table, stride, i));
    const __m128i rhs = _mm_shuffle_epi8(load_row(table, stride, f[i]), vf);
    const unsigned bad =
        ~static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(lhs, rhs))) & valid;
    if (bad != 0) {
      *x = i;
      *y = static_cast<std::size_t>(__builtin_ctz(bad));
      return true;
    }
  }
  return false;
}

INVSR_TARGET bool assoc_violation_avx2(const std::uint8_t* table,
                                       std::size_t stride, std::size_t n,
                                       std::size_t* i, std::size_t* j,
                                       std::size_t* k) {
  const unsigned valid = lane_mask(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint8_t* row_a = table + a * stride;
    const __m256i va2 = _mm256_broadcastsi128_si256(load_row(table, stride, a));
    std::size_t b = 0;
    for (; b + 1 < n; b += 2) {
      const __m256i lhs = load_rows(table, stride, row_a[b], row_a[b + 1]);
      const __m256i rhs = _mm256_shuffle_epi8(va2, load_rows(table, stride, b, b + 1));
      const unsigned eq =
          static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lhs, rhs)));
      if (first_bad(eq, valid, b, j, k)) {
        *i = a;
        return true;
      }
    }
    if (b < n) {
      const __m128i lhs = load_row(table, stride, row_a[b]);
      const __m128i rhs = _mm_shuffle_epi8(_mm256_castsi256_si128(va2),
                                           load_row(table, stride, b));
      const unsigned bad =
          ~static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(lhs, rhs))) & valid;
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
