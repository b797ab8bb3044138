#pragma once

// Inner loops over Cayley tables and image vectors.
//
// Every kernel has a scalar reference and, for tables of at most 16
// elements, byte-shuffle variants (SSSE3/AVX2 on x86-64, NEON on aarch64).
// For n <= 16 a table row or an image vector fits in one 128-bit register,
// and composition f(g(x)) is exactly a table-lookup shuffle with g as the
// index vector. The variant is chosen at runtime from CPU features; the
// INVSR_KERNEL environment variable (scalar|ssse3|avx2|neon) overrides it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace invsr::kernels {

/// Widest table the shuffle variants handle. Larger tables run scalar.
inline constexpr std::size_t kMaxSimdElements = 16;

enum class Backend : std::uint8_t { scalar, ssse3, avx2, neon };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

bool supports(Backend b);
std::vector<Backend> supported_backends();
/// Best backend the running CPU supports.
Backend detected_backend();
Backend active_backend();
/// Throws PreconditionError if `b` is not supported on this CPU.
void set_backend(Backend b);

/// Row-major n×n table of element indices. Rows are `stride` bytes apart;
/// the shuffle variants additionally need stride >= 16 so that a full
/// 16-byte row load stays inside the buffer.
struct TableRef {
  std::span<const std::uint8_t> cells;
  std::size_t n = 0;
  std::size_t stride = 0;

  [[nodiscard]] std::uint8_t at(std::size_t i, std::size_t j) const {
    return cells[i * stride + j];
  }
};

// Raw kernel signatures. Each backend provides all four; callers go
// through the span wrappers below unless they need a specific backend.
using ComposeFn = void (*)(const std::uint8_t* f, const std::uint8_t* g,
                           std::uint8_t* out, std::size_t n);
using PointwiseFn = void (*)(const std::uint8_t* table, std::size_t stride,
                             const std::uint8_t* f, const std::uint8_t* g,
                             std::uint8_t* out, std::size_t n);
using HomViolationFn = bool (*)(const std::uint8_t* table, std::size_t stride,
                                const std::uint8_t* f, std::size_t n,
                                std::size_t* x, std::size_t* y);
using AssocViolationFn = bool (*)(const std::uint8_t* table,
                                  std::size_t stride, std::size_t n,
                                  std::size_t* i, std::size_t* j,
                                  std::size_t* k);

struct KernelTable {
  Backend backend;
  ComposeFn compose;
  PointwiseFn pointwise;
  HomViolationFn hom_violation;
  AssocViolationFn assoc_violation;
};

/// Kernels of a specific backend. Throws PreconditionError if unsupported.
const KernelTable& kernels_for(Backend b);

/// out[x] = f[g[x]]
void compose(std::span<const std::uint8_t> f, std::span<const std::uint8_t> g,
             std::span<std::uint8_t> out);

/// out[x] = table(f[x], g[x])
void pointwise(TableRef table, std::span<const std::uint8_t> f,
               std::span<const std::uint8_t> g, std::span<std::uint8_t> out);

/// Lexicographically first (x, y) with f(x+y) != f(x)+f(y), if any.
std::optional<std::pair<std::size_t, std::size_t>> hom_violation(
    TableRef table, std::span<const std::uint8_t> f);

/// Lexicographically first (i, j, k) with (i+j)+k != i+(j+k), if any.
std::optional<std::array<std::size_t, 3>> assoc_violation(TableRef table);

}  // namespace invsr::kernels
