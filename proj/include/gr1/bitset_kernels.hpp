#pragma once

#include <cstddef>
#include <cstdint>

namespace gr1 {

/**
 * Word-level kernels backing StateSet. Two implementations exist: a scalar
 * reference (always available) and an AVX2 variant selected at runtime when
 * the CPU supports it. Both operate on arrays of 64-bit words; callers are
 * responsible for keeping unused tail bits zero.
 *
 * Set GR1_FORCE_SCALAR=1 in the environment to pin the scalar backend.
 */
struct BitsetKernels {
    void (*land)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*lor)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*landnot)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n); // a & ~b
    void (*lxor)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*lnot)(uint64_t* dst, const uint64_t* a, size_t n);
    uint64_t (*popcount)(const uint64_t* a, size_t n);
    bool (*any)(const uint64_t* a, size_t n);
    bool (*equal)(const uint64_t* a, const uint64_t* b, size_t n);
    bool (*subset)(const uint64_t* a, const uint64_t* b, size_t n); // a ⊆ b
    bool (*intersects)(const uint64_t* a, const uint64_t* b, size_t n);
    const char* name;
};

const BitsetKernels& scalar_kernels();

// Returns nullptr when the CPU lacks AVX2.
const BitsetKernels* avx2_kernels();

// The backend picked at startup (AVX2 when available unless forced scalar).
const BitsetKernels& active_kernels();

} // namespace gr1
