#pragma once

// Per-backend entry points. The SIMD translation units include only this
// header and intrinsics so that no inline library code is compiled with
// wider ISA flags than the running CPU may support.
//
// SIMD contract: n <= 16, stride >= 16, f/g readable for n bytes.

#include <cstddef>
#include <cstdint>

namespace invsr::kernels::detail {

void compose_scalar(const std::uint8_t* f, const std::uint8_t* g,
                    std::uint8_t* out, std::size_t n);
void pointwise_scalar(const std::uint8_t* table, std::size_t stride,
                      const std::uint8_t* f, const std::uint8_t* g,
                      std::uint8_t* out, std::size_t n);
bool hom_violation_scalar(const std::uint8_t* table, std::size_t stride,
                          const std::uint8_t* f, std::size_t n, std::size_t* x,
                          std::size_t* y);
bool assoc_violation_scalar(const std::uint8_t* table, std::size_t stride,
                            std::size_t n, std::size_t* i, std::size_t* j,
                            std::size_t* k);

#if defined(__x86_64__) || defined(_M_X64)
#define INVSR_KERNELS_X86 1
void compose_ssse3(const std::uint8_t* f, const std::uint8_t* g,
                   std::uint8_t* out, std::size_t n);
void pointwise_ssse3(const std::uint8_t* table, std::size_t stride,
                     const std::uint8_t* f, const std::uint8_t* g,
                     std::uint8_t* out, std::size_t n);
bool hom_violation_ssse3(const std::uint8_t* table, std::size_t stride,
                         const std::uint8_t* f, std::size_t n, std::size_t* x,
                         std::size_t* y);
bool assoc_violation_ssse3(const std::uint8_t* table, std::size_t stride,
                           std::size_t n, std::size_t* i, std::size_t* j,
                           std::size_t* k);

void compose_avx2(const std::uint8_t* f, const std::uint8_t* g,
                  std::uint8_t* out, std::size_t n);
void pointwise_avx2(const std::uint8_t* table, std::size_t stride,
                    const std::uint8_t* f, const std::uint8_t* g,
                    std::uint8_t* out, std::size_t n);
bool hom_violation_avx2(const std::uint8_t* table, std::size_t stride,
                        const std::uint8_t* f, std::size_t n, std::size_t* x,
                        std::size_t* y);
bool assoc_violation_avx2(const std::uint8_t* table, std::size_t stride,
                          std::size_t n, std::size_t* i, std::size_t* j,
                          std::size_t* k);
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define INVSR_KERNELS_NEON 1
void compose_neon(const std::uint8_t* f, const std::uint8_t* g,
                  std::uint8_t* out, std::size_t n);
void pointwise_neon(const std::uint8_t* table, std::size_t stride,
                    const std::uint8_t* f, const std::uint8_t* g,
                    std::uint8_t* out, std::size_t n);
bool hom_violation_neon(const std::uint8_t* table, std::size_t stride,
                        const std::uint8_t* f, std::size_t n, std::size_t* x,
                        std::size_t* y);
bool assoc_violation_neon(const std::uint8_t* table, std::size_t stride,
                          std::size_t n, std::size_t* i, std::size_t* j,
                          std::size_t* k);
#endif

}  // namespace invsr::kernels::detail
