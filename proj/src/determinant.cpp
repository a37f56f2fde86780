#include "schurlab/determinant.hpp"

#include <utility>

namespace schurlab {

Rational det_bareiss(const RingMatrix<Rational>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("determinant of an empty matrix");
    RingMatrix<Rational> m = a;
    Rational previous(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            m(i, k) = Rational(0);
        }
        previous = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace schurlab
