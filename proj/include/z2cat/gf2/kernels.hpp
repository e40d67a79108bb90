#pragma once

#include <cstddef>
#include <cstdint>

// Word-level GF(2) kernels. Everything in this project ultimately reduces to
// XOR, AND and popcount over packed 64-bit words; these are the data-parallel
// inner loops. A scalar reference implementation is always available, and an
// AVX2 variant is selected at runtime on x86-64 when the CPU supports it.
// Both variants compute bit-identical results and are equivalence-tested.

namespace z2cat::gf2::kernels {

struct Ops {
    const char* name;
    // dst[i] ^= src[i]
    void (*xor_inplace)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    // dst[i] = a[i] ^ b[i]
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t nwords);
    std::uint64_t (*popcount)(const std::uint64_t* p, std::size_t nwords);
    // popcount(a & b)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t nwords);
};

const Ops& scalar_ops();

// AVX2 variant, or nullptr when unavailable (non-x86 build or CPU without AVX2).
const Ops* avx2_ops();

// Backend used by the library. Picked once: AVX2 if the CPU supports it,
// scalar otherwise. Z2CAT_KERNEL=scalar|avx2 in the environment overrides
// the choice (requesting avx2 on an unsupported CPU falls back to scalar).
const Ops& active_ops();

inline void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    active_ops().xor_inplace(dst, src, n);
}
inline void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t n) {
    active_ops().xor_into(dst, a, b, n);
}
inline std::uint64_t popcount(const std::uint64_t* p, std::size_t n) {
    return active_ops().popcount(p, n);
}
inline std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n) {
    return active_ops().and_popcount(a, b, n);
}

} // namespace z2cat::gf2::kernels
