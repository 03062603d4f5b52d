#include "gr1/bitset_kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gr1 {

const BitsetKernels& active_kernels() {
    static const BitsetKernels* selected = [] {
        const char* force = std::getenv("GR1_FORCE_SCALAR");
        if (force && std::strcmp(force, "0") != 0) return &scalar_kernels();
        if (const BitsetKernels* v = avx2_kernels()) return v;
        return &scalar_kernels();
    }();
    return *selected;
}

} // namespace gr1
