#include "schurlab/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "schurlab/errors.hpp"
#include "schurlab/finite_diff.hpp"

namespace schurlab {

FormalSeriesCalculus::function_type FormalSeriesCalculus::compose_affine(const function_type& f, const Rational& shift,
                                                                         const Rational& r) const {
    if (!shift.is_zero()) throw InvalidInput("formal calculus: shifts must lie in t Q[[t]]; only zero is constant");
    return series_compose_linear(f, r);
}

bool FormalSeriesCalculus::agree(const function_type& f, const function_type& g) const {
    const int d = std::min(f.cutoff(), g.cutoff());
    return f.truncate(d) == g.truncate(d);
}

NumericSmoothCalculus::function_type NumericSmoothCalculus::derivative(const function_type& f) const {
    return [f, h = step_](double x) { return finite_difference(f, x, 1, h, Stencil::central).value; };
}

NumericSmoothCalculus::function_type NumericSmoothCalculus::add(const function_type& f, const function_type& g) const {
    return [f, g](double x) { return f(x) + g(x); };
}

NumericSmoothCalculus::function_type NumericSmoothCalculus::multiply(const function_type& f,
                                                                     const function_type& g) const {
    return [f, g](double x) { return f(x) * g(x); };
}

NumericSmoothCalculus::function_type NumericSmoothCalculus::scale(double r, const function_type& f) const {
    return [f, r](double x) { return r * f(x); };
}

NumericSmoothCalculus::function_type NumericSmoothCalculus::compose_affine(const function_type& f, double shift,
                                                                           double r) const {
    return [f, shift, r](double x) { return f(shift + r * x); };
}

bool NumericSmoothCalculus::agree(const function_type& f, const function_type& g) const {
    return std::all_of(points_.begin(), points_.end(), [&](double x) {
        const double a = f(x);
        const double b = g(x);
        return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= tolerance_ * (1.0 + std::abs(b));
    });
}

}  // namespace schurlab
