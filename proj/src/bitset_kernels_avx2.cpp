#include "gr1/bitset_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#define GR1_AVX2 __attribute__((target("avx2")))

namespace gr1 {
namespace {

// Binary word ops: 4 words per lane, scalar tail.

GR1_AVX2 void v_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

GR1_AVX2 void v_or(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

GR1_AVX2 void v_andnot(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // andnot(x, y) = ~x & y, so pass b first to get a & ~b
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vb, va));
    }
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

GR1_AVX2 void v_xor(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

GR1_AVX2 void v_not(uint64_t* dst, const uint64_t* a, size_t n) {
    size_t i = 0;
    const __m256i ones = _mm256_set1_epi64x(-1);
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, ones));
    }
    for (; i < n; ++i) dst[i] = ~a[i];
}

// Nibble-LUT popcount (Mula): per 32-byte block, shuffle a 16-entry table by
// low/high nibbles and horizontally accumulate with sad against zero.
GR1_AVX2 uint64_t v_popcount(const uint64_t* a, size_t n) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

GR1_AVX2 bool v_any(const uint64_t* a, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (a[i]) return true;
    return false;
}

GR1_AVX2 bool v_equal(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i x = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

GR1_AVX2 bool v_subset(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i d = _mm256_andnot_si256(vb, va); // a & ~b
        if (!_mm256_testz_si256(d, d)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

GR1_AVX2 bool v_intersects(const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true; // testz checks va & vb
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

const BitsetKernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const BitsetKernels k = {
        v_and, v_or, v_andnot, v_xor, v_not,
        v_popcount, v_any, v_equal, v_subset, v_intersects,
        "avx2",
    };
    return &k;
}

} // namespace gr1

#else // non-x86: scalar only (a NEON variant would slot in here)

namespace gr1 {
const BitsetKernels* avx2_kernels() { return nullptr; }
} // namespace gr1

#endif
