#include "gr1/state_set.hpp"

// Header-only in practice; this TU anchors the target so the library always
// carries the kernels object files.

namespace gr1 {} // namespace gr1
