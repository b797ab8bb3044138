#include <atomic>
#include <cstdlib>
#include <string>

#include "invsr/errors.hpp"
#include "invsr/kernels.hpp"
#include "kernels_impl.hpp"

namespace invsr::kernels {
namespace {

constexpr KernelTable kScalar{Backend::scalar, detail::compose_scalar,
                              detail::pointwise_scalar,
                              detail::hom_violation_scalar,
                              detail::assoc_violation_scalar};
#if INVSR_KERNELS_X86
constexpr KernelTable kSsse3{Backend::ssse3, detail::compose_ssse3,
                             detail::pointwise_ssse3,
                             detail::hom_violation_ssse3,
                             detail::assoc_violation_ssse3};
constexpr KernelTable kAvx2{Backend::avx2, detail::compose_avx2,
                            detail::pointwise_avx2, detail::hom_violation_avx2,
                            detail::assoc_violation_avx2};
#endif
#if INVSR_KERNELS_NEON
constexpr KernelTable kNeon{Backend::neon, detail::compose_neon,
                            detail::pointwise_neon, detail::hom_violation_neon,
                            detail::assoc_violation_neon};
#endif

Backend initial_backend() {
  if (const char* env = std::getenv("INVSR_KERNEL")) {
    if (auto b = parse_backend(env); b && supports(*b)) {
      return *b;
    }
  }
  return detected_backend();
}

std::atomic<Backend>& active_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

bool simd_ok(std::size_t n, std::size_t stride) {
  return n <= kMaxSimdElements && stride >= kMaxSimdElements;
}

const KernelTable& simd_or_scalar(std::size_t n, std::size_t stride) {
  return simd_ok(n, stride) ? kernels_for(active_backend()) : kScalar;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::ssse3:
      return "ssse3";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (Backend b : {Backend::scalar, Backend::ssse3, Backend::avx2,
                    Backend::neon}) {
    if (backend_name(b) == name) {
      return b;
    }
  }
  return std::nullopt;
}

bool supports(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
#if INVSR_KERNELS_X86
    case Backend::ssse3:
      return __builtin_cpu_supports("ssse3");
    case Backend::avx2:
      return __builtin_cpu_supports("avx2");
#endif
#if INVSR_KERNELS_NEON
    case Backend::neon:
      return true;
#endif
    default:
      return false;
  }
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::ssse3, Backend::avx2,
                    Backend::neon}) {
    if (supports(b)) {
      out.push_back(b);
    }
  }
  return out;
}

Backend detected_backend() {
  for (Backend b : {Backend::avx2, Backend::neon, Backend::ssse3}) {
    if (supports(b)) {
      return b;
    }
  }
  return Backend::scalar;
}

Backend active_backend() { return active_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!supports(b)) {
    throw PreconditionError("kernel backend not supported on this CPU: " +
                            std::string(backend_name(b)));
  }
  active_slot().store(b, std::memory_order_relaxed);
}

const KernelTable& kernels_for(Backend b) {
  if (!supports(b)) {
    throw PreconditionError("kernel backend not supported on this CPU: " +
                            std::string(backend_name(b)));
  }
  switch (b) {
#if INVSR_KERNELS_X86
    case Backend::ssse3:
      return kSsse3;
    case Backend::avx2:
      return kAvx2;
#endif
#if INVSR_KERNELS_NEON
    case Backend::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

void compose(std::span<const std::uint8_t> f, std::span<const std::uint8_t> g,
             std::span<std::uint8_t> out) {
  const std::size_t n = g.size();
  // compose needs no table, so any stride qualifies
  simd_or_scalar(n, kMaxSimdElements).compose(f.data(), g.data(), out.data(), n);
}

void pointwise(TableRef table, std::span<const std::uint8_t> f,
               std::span<const std::uint8_t> g, std::span<std::uint8_t> out) {
  simd_or_scalar(table.n, table.stride)
      .pointwise(table.cells.data(), table.stride, f.data(), g.data(),
                 out.data(), table.n);
}

std::optional<std::pair<std::size_t, std::size_t>> hom_violation(
    TableRef table, std::span<const std::uint8_t> f) {
  std::size_t x = 0;
  std::size_t y = 0;
  if (simd_or_scalar(table.n, table.stride)
          .hom_violation(table.cells.data(), table.stride, f.data(), table.n,
                         &x, &y)) {
    return std::pair{x, y};
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> assoc_violation(TableRef table) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  if (simd_or_scalar(table.n, table.stride)
          .assoc_violation(table.cells.data(), table.stride, table.n, &i, &j,
                           &k)) {
    return std::array{i, j, k};
  }
  return std::nullopt;
}

}  // namespace invsr::kernels
