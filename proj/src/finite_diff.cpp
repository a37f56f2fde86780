#include "schurlab/finite_diff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

std::vector<Rational> stencil_weights(const std::vector<int>& offsets, int order) {
    const std::size_t n = offsets.size();
    if (order < 0 || static_cast<std::size_t>(order) >= n) throw InvalidInput("stencil too small for the order");
    // Solve sum_i w_i o_i^j = k! [j == k], j = 0..n-1, by Gauss-Jordan.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[j][i] = pow(Rational(offsets[i]), static_cast<unsigned>(j));
        m[j][n] = j == static_cast<std::size_t>(order) ? factorial(static_cast<unsigned>(order)) : Rational(0);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) throw InvalidInput("stencil offsets must be distinct");
        std::swap(m[c], m[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Rational factor = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = m[i][n] / m[i][i];
    return w;
}

namespace {

std::vector<int> offsets_for(int order, Stencil stencil) {
    std::vector<int> out;
    if (stencil == Stencil::forward) {
        for (int i = 0; i < order + 4; ++i) out.push_back(i);
    } else {
        const int half = (order + 1) / 2 + 1;
        for (int i = -half; i <= half; ++i) out.push_back(i);
    }
    return out;
}

double raw_difference(const std::function<double(double)>& f, double a, int order, double h,
                      const std::vector<int>& offsets, const std::vector<double>& weights, double f0) {
    // Differences against f(a) so a constant function gives exactly zero.
    double acc = 0.0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] == 0) continue;
        acc += weights[i] * (f(a + offsets[i] * h) - f0);
    }
    return acc / std::pow(h, order);
}

}  // namespace

DerivativeEstimate finite_difference(const std::function<double(double)>& f, double a, int order, double step,
                                     Stencil stencil) {
    const double f0 = f(a);
    if (!std::isfinite(f0)) throw InvalidInput("finite_difference: non-finite value at the base point");
    if (order == 0) return {f0, 0.0};
    const auto offsets = offsets_for(order, stencil);
    std::vector<double> weights;
    for (const auto& w : stencil_weights(offsets, order)) weights.push_back(w.to_double());
    const double coarse = raw_difference(f, a, order, step, offsets, weights, f0);
    const double fine = raw_difference(f, a, order, step / 2, offsets, weights, f0);
    // Both stencils are fourth-order accurate.
    const double extrapolated = (16.0 * fine - coarse) / 15.0;
    return {extrapolated, std::abs(fine - coarse) / 15.0};
}

NumericProfile finite_diff_derivs(const std::function<double(double)>& f, double a, int max_order, double step,
                                  Stencil stencil, double domain_lo, double domain_hi) {
    if (max_order < 0 || max_order > 8)
        throw InvalidInput("finite_diff_derivs: order must be in 0..8 (higher orders need exact series)");
    if (step <= 0) throw InvalidInput("finite_diff_derivs: step must be positive");
    NumericProfile p;
    p.base_point = a;
    for (int k = 0; k <= max_order; ++k) {
        const double h = step * std::exp2((k - 1) / 3.0);
        const auto offsets = offsets_for(k, stencil);
        const double lo = a + offsets.front() * h;
        const double hi = a + offsets.back() * h;
        if (k > 0 && (lo < domain_lo || hi > domain_hi))
            throw InvalidInput("finite_diff_derivs: stencil for order " + std::to_string(k) + " leaves the domain");
        const DerivativeEstimate est = finite_difference(f, a, k, h, stencil);
        if (!std::isfinite(est.value))
            throw InvalidInput("finite_diff_derivs: non-finite estimate at order " + std::to_string(k));
        p.values.push_back(est.value);
        p.error_estimate.push_back(est.error);
        // Read as zero only when indistinguishable from zero at this accuracy.
        p.zero_tolerance.push_back(k == 0 ? 0.0 : std::max(100.0 * est.error, 1e-7 * (1.0 + std::abs(f(a)))));
    }
    return p;
}

}  // namespace schurlab
