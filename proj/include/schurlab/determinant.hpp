#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "schurlab/bounds.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/ring_matrix.hpp"

namespace schurlab {

/// Laplace expansion along the first row, memoised over column subsets so
/// that each minor is formed once: O(n 2^n) ring multiplications. Works
/// for any commutative-ring carrier.
template <class T>
T det_laplace(const RingMatrix<T>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("determinant of an empty matrix");
    if (n > 20) throw BoundExceeded("det_laplace: dimension too large");
    const T& like = a(0, 0);
    const std::uint32_t full = (1U << n) - 1U;

    // minor[S] = det of rows (n-|S| .. n-1) restricted to the columns in S.
    std::vector<T> minor(std::size_t{1} << n, zero_like(like));
    minor[0] = one_like(like);
    for (std::uint32_t subset = 1; subset <= full; ++subset) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(subset));
        T acc = zero_like(like);
        int position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(subset & (1U << col))) continue;
            const T& rest = minor[subset & ~(1U << col)];
            if (!is_zero(a(row, col)) && !is_zero(rest)) {
                T term = a(row, col) * rest;
                acc = (position % 2 == 0) ? acc + term : acc - term;
            }
            ++position;
        }
        minor[subset] = std::move(acc);
    }
    return minor[full];
}

/// Fraction-free (Bareiss) elimination with row pivoting.
Rational det_bareiss(const RingMatrix<Rational>& a);

/// Exact determinant with the configured size bound; rationals take the
/// Bareiss path, every other carrier the Laplace path.
template <class T>
T det_ring(const RingMatrix<T>& a, std::size_t max_n = bounds().max_n) {
    if (a.size() > max_n)
        throw BoundExceeded("det_ring: dimension " + std::to_string(a.size()) + " exceeds bound " +
                            std::to_string(max_n));
    if constexpr (std::is_same_v<T, Rational>)
        return det_bareiss(a);
    else
        return det_laplace(a);
}

}  // namespace schurlab
