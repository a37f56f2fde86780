#pragma once

#include <cstddef>

namespace schurlab {

/// Desk-scale limits. `max_n` may be overridden by SCHURLAB_MAX_N.
struct Bounds {
    std::size_t max_n = 6;           // determinant and rational-carrier dimension
    std::size_t max_symbolic_n = 4;  // polynomial-carrier dimension
    int max_cutoff = 12;
};

/// Bounds with environment overrides applied; read once per process.
const Bounds& bounds();

}  // namespace schurlab
