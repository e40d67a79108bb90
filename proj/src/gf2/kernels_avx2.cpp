// AVX2 variants of the GF(2) word kernels. This translation unit is the only
// one compiled with -mavx2; avx2_ops() returns nullptr unless the running CPU
// reports AVX2 support.

#include "z2cat/gf2/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define Z2CAT_X86_64 1
#else
#define Z2CAT_X86_64 0
#endif

#if Z2CAT_X86_64

#include <immintrin.h>

#include <bit>

namespace z2cat::gf2::kernels {
namespace {

void a_xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
        __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d0, s0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(d1, s1));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

void a_xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(x, y));
    }
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

// Nibble-LUT popcount (Mula): per-byte counts via pshufb, accumulated with sad.
inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                                         1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

std::uint64_t a_popcount(const std::uint64_t* p, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(p[i]));
    return c;
}

std::uint64_t a_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(x, y)));
    }
    std::uint64_t c = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                      static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return c;
}

} // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Ops ops{"avx2", a_xor_inplace, a_xor_into, a_popcount, a_and_popcount};
    return &ops;
}

} // namespace z2cat::gf2::kernels

#else // !Z2CAT_X86_64

namespace z2cat::gf2::kernels {
const Ops* avx2_ops() { return nullptr; }
} // namespace z2cat::gf2::kernels

#endif
