#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/rational.hpp"
#include "schurlab/trunc_series.hpp"

namespace schurlab {

/// A function algebra with a derivation that is linear, obeys the product
/// rule and the chain rule for affine substitutions x -> shift + r x.
template <class Calc>
concept DifferentialCalculus = requires(const Calc& c, const typename Calc::function_type& f,
                                        const typename Calc::scalar_type& r,
                                        const typename Calc::shift_type& shift) {
    { c.derivative(f) } -> std::same_as<typename Calc::function_type>;
    { c.add(f, f) } -> std::same_as<typename Calc::function_type>;
    { c.multiply(f, f) } -> std::same_as<typename Calc::function_type>;
    { c.scale(r, f) } -> std::same_as<typename Calc::function_type>;
    { c.compose_affine(f, shift, r) } -> std::same_as<typename Calc::function_type>;
    { c.agree(f, f) } -> std::same_as<bool>;
};

/// Formal power series over Q truncated at a fixed cutoff, with the formal
/// derivative sum M f_M t^{M-1}. Functions act on X = t Q[[t]], so the only
/// constant shift in X is zero; compose_affine rejects any other.
class FormalSeriesCalculus {
public:
    using function_type = TruncSeries<Rational>;
    using scalar_type = Rational;
    using shift_type = Rational;

    function_type derivative(const function_type& f) const { return f.derivative(); }
    function_type add(const function_type& f, const function_type& g) const { return f + g; }
    function_type multiply(const function_type& f, const function_type& g) const { return f * g; }
    function_type scale(const Rational& r, const function_type& f) const { return r * f; }
    function_type compose_affine(const function_type& f, const Rational& shift, const Rational& r) const;
    /// Exact equality on the common cutoff.
    bool agree(const function_type& f, const function_type& g) const;
};

/// Smooth real functions of one variable with a Richardson-extrapolated
/// central difference as the derivation. Agreement is checked pointwise at
/// `points` to a relative tolerance.
class NumericSmoothCalculus {
public:
    using function_type = std::function<double(double)>;
    using scalar_type = double;
    using shift_type = double;

    explicit NumericSmoothCalculus(std::vector<double> points, double tolerance = 1e-8, double step = 1e-2)
        : points_(std::move(points)), tolerance_(tolerance), step_(step) {}

    function_type derivative(const function_type& f) const;
    function_type add(const function_type& f, const function_type& g) const;
    function_type multiply(const function_type& f, const function_type& g) const;
    function_type scale(double r, const function_type& f) const;
    function_type compose_affine(const function_type& f, double shift, double r) const;
    bool agree(const function_type& f, const function_type& g) const;

    const std::vector<double>& points() const { return points_; }
    double tolerance() const { return tolerance_; }

private:
    std::vector<double> points_;
    double tolerance_;
    double step_;
};

static_assert(DifferentialCalculus<FormalSeriesCalculus>);
static_assert(DifferentialCalculus<NumericSmoothCalculus>);

template <class Calc>
struct CalculusSamples {
    std::vector<typename Calc::function_type> functions;
    std::vector<typename Calc::scalar_type> scalars;
    std::vector<typename Calc::shift_type> shifts;
};

struct CalculusLawReport {
    bool passed = true;
    std::size_t checks = 0;
    std::string failed_law;  // "linearity", "product_rule" or "chain_rule"
    std::string witness;     // indices of the sample that broke the law
};

/// Checks linearity, the product rule and the affine chain rule over
/// consecutive pairs of sample functions. Stops at the first violation.
template <class Calc>
    requires DifferentialCalculus<Calc>
CalculusLawReport calculus_laws_check(const Calc& calc, const CalculusSamples<Calc>& samples) {
    CalculusLawReport report;
    const auto& fs = samples.functions;
    const auto& rs = samples.scalars;
    auto fail = [&](const char* law, std::string witness) {
        report.passed = false;
        report.failed_law = law;
        report.witness = std::move(witness);
    };
    for (std::size_t i = 0; i < fs.size() && report.passed; ++i) {
        const auto& f = fs[i];
        const auto& g = fs[(i + 1) % fs.size()];
        const auto& r1 = rs[i % rs.size()];
        const auto& r2 = rs[(i + 1) % rs.size()];
        const std::string tag = "f=" + std::to_string(i) + " g=" + std::to_string((i + 1) % fs.size());

        // d(r1 f + r2 g) = r1 df + r2 dg
        ++report.checks;
        if (!calc.agree(calc.derivative(calc.add(calc.scale(r1, f), calc.scale(r2, g))),
                        calc.add(calc.scale(r1, calc.derivative(f)), calc.scale(r2, calc.derivative(g))))) {
            fail("linearity", tag);
            break;
        }
        // d(fg) = f dg + df g
        ++report.checks;
        if (!calc.agree(calc.derivative(calc.multiply(f, g)),
                        calc.add(calc.multiply(f, calc.derivative(g)), calc.multiply(calc.derivative(f), g)))) {
            fail("product_rule", tag);
            break;
        }
        // g(x) = f(shift + r x)  =>  dg(x) = r df(shift + r x)
        for (std::size_t s = 0; s < samples.shifts.size(); ++s) {
            ++report.checks;
            const auto& shift = samples.shifts[s];
            if (!calc.agree(calc.derivative(calc.compose_affine(f, shift, r1)),
                            calc.scale(r1, calc.compose_affine(calc.derivative(f), shift, r1)))) {
                fail("chain_rule", tag + " shift=" + std::to_string(s));
                break;
            }
        }
    }
    return report;
}

}  // namespace schurlab
