#include "kernels_impl.hpp"

namespace invsr::kernels::detail {

void compose_scalar(const std::uint8_t* f, const std::uint8_t* g,
                    std::uint8_t* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = f[g[x]];
  }
}

void pointwise_scalar(const std::uint8_t* table, std::size_t stride,
                      const std::uint8_t* f, const std::uint8_t* g,
                      std::uint8_t* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = table[f[x] * stride + g[x]];
  }
}

bool hom_violation_scalar(const std::uint8_t* table, std::size_t stride,
                          const std::uint8_t* f, std::size_t n, std::size_t* x,
                          std::size_t* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* row = table + i * stride;
    const std::uint8_t* image_row = table + f[i] * stride;
    for (std::size_t j = 0; j < n; ++j) {
      if (f[row[j]] != image_row[f[j]]) {
        *x = i;
        *y = j;
        return true;
      }
    }
  }
  return false;
}

bool assoc_violation_scalar(const std::uint8_t* table, std::size_t stride,
                            std::size_t n, std::size_t* i, std::size_t* j,
                            std::size_t* k) {
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint8_t* row_a = table + a * stride;
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint8_t* row_ab = table + row_a[b] * stride;
      const std::uint8_t* row_b = table + b * stride;
      for (std::size_t c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          *i = a;
          *j = b;
          *k = c;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace invsr::kernels::detail
