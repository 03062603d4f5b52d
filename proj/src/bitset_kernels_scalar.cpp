#include "gr1/bitset_kernels.hpp"

#include <bit>

namespace gr1 {
namespace {

void s_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_or(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void s_andnot(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void s_xor(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void s_not(uint64_t* dst, const uint64_t* a, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

uint64_t s_popcount(const uint64_t* a, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(std::popcount(a[i]));
    return c;
}

bool s_any(const uint64_t* a, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i]) return true;
    return false;
}

bool s_equal(const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool s_subset(const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool s_intersects(const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

const BitsetKernels& scalar_kernels() {
    static const BitsetKernels k = {
        s_and, s_or, s_andnot, s_xor, s_not,
        s_popcount, s_any, s_equal, s_subset, s_intersects,
        "scalar",
    };
    return k;
}

} // namespace gr1
