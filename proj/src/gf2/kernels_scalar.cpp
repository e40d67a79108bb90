#include "z2cat/gf2/kernels.hpp"

#include <bit>

namespace z2cat::gf2::kernels {
namespace {

void s_xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void s_xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

std::uint64_t s_popcount(const std::uint64_t* p, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(p[i]));
    return c;
}

std::uint64_t s_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return c;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", s_xor_inplace, s_xor_into, s_popcount, s_and_popcount};
    return ops;
}

} // namespace z2cat::gf2::kernels
