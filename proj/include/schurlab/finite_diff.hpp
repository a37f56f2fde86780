#pragma once

#include <functional>
#include <vector>

#include "schurlab/deriv_profile.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

enum class Stencil { central, forward };

/// Exact weights w_i with sum_i w_i g(i h) / h^k ~ g^(k)(0) for integer
/// offsets, exact for polynomials of degree < offsets.size().
std::vector<Rational> stencil_weights(const std::vector<int>& offsets, int order);

/// One derivative estimate with its Richardson error estimate.
struct DerivativeEstimate {
    double value = 0.0;
    double error = 0.0;
};

/// f^(k)(a) from a fourth-order stencil at steps h and h/2, combined by
/// Richardson extrapolation. The forward stencil only samples [a, ...).
DerivativeEstimate finite_difference(const std::function<double(double)>& f, double a, int order, double step,
                                     Stencil stencil);

/// Default base step; order k uses step * 2^{(k-1)/3} to balance
/// truncation against cancellation.
inline constexpr double kDefaultFdStep = 0.03;

/// Profile of f^(k)(a), k = 0..max_order (max_order <= 8). A forward
/// stencil is used when a is the left endpoint of the domain. Each order
/// carries its error estimate and a zero tolerance derived from it.
NumericProfile finite_diff_derivs(const std::function<double(double)>& f, double a, int max_order,
                                  double step = kDefaultFdStep, Stencil stencil = Stencil::central,
                                  double domain_lo = -1e300, double domain_hi = 1e300);

}  // namespace schurlab
