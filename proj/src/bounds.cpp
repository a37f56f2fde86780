#include "schurlab/bounds.hpp"

#include <cstdlib>
#include <string>

namespace schurlab {

namespace {

Bounds load_bounds() {
    Bounds b;
    if (const char* env = std::getenv("SCHURLAB_MAX_N")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                b.max_n = static_cast<std::size_t>(v);
                if (b.max_symbolic_n > b.max_n) b.max_symbolic_n = b.max_n;
            }
        } catch (const std::exception&) {
            // unparsable override: keep defaults
        }
    }
    return b;
}

}  // namespace

const Bounds& bounds() {
    static const Bounds b = load_bounds();
    return b;
}

}  // namespace schurlab
