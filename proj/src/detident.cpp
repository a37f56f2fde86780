#include "schurlab/detident.hpp"

namespace schurlab {

std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> symbolic_uv(std::size_t n) {
    return {symbolic_vector(2 * n, 0, n), symbolic_vector(2 * n, n, n)};
}

Renderer<MultiPoly> uv_renderer(std::size_t n) {
    return [names = uv_names(n)](const MultiPoly& p) { return p.to_string(names); };
}

}  // namespace schurlab
