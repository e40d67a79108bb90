#pragma once

#include <bit>
#include <cstdint>

namespace z2cat::gf2::bits {

inline constexpr std::uint64_t kSwapMasks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// All-ones mask of the low `k` bits, k in [0, 64].
inline constexpr std::uint64_t low_mask(unsigned k) {
    return k >= 64 ? ~0ULL : ((1ULL << k) - 1);
}

// Permute the low 2^n bits of `w` by XOR-translation: result bit x equals
// input bit (x ^ y), for y < 2^n, n <= 6. The translation decomposes into
// swaps of adjacent 2^j-bit sub-blocks, one per set bit of y.
inline constexpr std::uint64_t xor_shuffle(std::uint64_t w, unsigned y, unsigned n) {
    for (unsigned j = 0; j < n; ++j) {
        if ((y >> j) & 1U) {
            const std::uint64_t m = kSwapMasks[j];
            const unsigned s = 1U << j;
            w = ((w & m) << s) | ((w >> s) & m);
        }
    }
    return w;
}

inline constexpr unsigned parity64(std::uint64_t w) {
    return static_cast<unsigned>(std::popcount(w) & 1);
}

} // namespace z2cat::gf2::bits
