#pragma once

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "schurlab/errors.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

/// Derivative values f^(k)(a), k = 0..K, of a function at a base point.
///
/// `tail_zero` records that every derivative beyond K is known to vanish
/// (polynomials, monomials); otherwise orders above K are unknown. For the
/// floating carrier, `zero_tolerance[k]` is the magnitude below which the
/// k-th value is read as zero. The nonzero orders are always recomputed.
template <class T>
struct DerivProfile {
    T base_point{};
    std::vector<T> values;
    bool tail_zero = false;
    std::vector<double> zero_tolerance;
    std::vector<double> error_estimate;

    int max_order() const { return static_cast<int>(values.size()) - 1; }

    /// Whether f^(k)(a) is known (k within range, or beyond with a zero tail).
    bool knows(int k) const { return k >= 0 && (k <= max_order() || tail_zero); }

    bool is_zero_at(int k) const {
        if (k > max_order()) {
            if (!tail_zero) throw UndecidableProfile("derivative order " + std::to_string(k) + " is beyond the profile");
            return true;
        }
        const T& v = values[static_cast<std::size_t>(k)];
        if constexpr (std::is_same_v<T, double>) {
            const double tol = static_cast<std::size_t>(k) < zero_tolerance.size() ? zero_tolerance[k] : 0.0;
            return std::abs(v) <= tol;
        } else {
            return is_zero(v);
        }
    }

    /// -1, 0 or +1 with the zero tolerance applied.
    int sign_at(int k) const {
        if (is_zero_at(k)) return 0;
        const T& v = values[static_cast<std::size_t>(k)];
        if constexpr (std::is_same_v<T, double>)
            return v > 0 ? 1 : -1;
        else
            return v.sign();
    }

    /// Increasing orders (>= from) of the nonzero entries within the profile.
    std::vector<int> nonzero_orders(int from = 0) const {
        std::vector<int> out;
        for (int k = std::max(from, 0); k <= max_order(); ++k)
            if (!is_zero_at(k)) out.push_back(k);
        return out;
    }

    /// Value with the zero tail applied beyond the stored range.
    T value(int k) const {
        if (k <= max_order()) return values.at(static_cast<std::size_t>(k));
        if (!tail_zero) throw UndecidableProfile("derivative order " + std::to_string(k) + " is beyond the profile");
        return zero_like(values.empty() ? T{} : values.front());
    }
};

using ExactProfile = DerivProfile<Rational>;
using NumericProfile = DerivProfile<double>;

/// Profile of a polynomial sum c_j x^j at base point a (exact Taylor shift).
ExactProfile polynomial_profile(const std::vector<Rational>& coeffs, const Rational& a);

/// exp at 0: every derivative equals one, orders 0..max_order.
ExactProfile exp_profile(int max_order);

/// c * x^k at 0: single nonzero derivative k! c at order k; zero tail.
ExactProfile monomial_profile(int k, const Rational& c = Rational(1));

}  // namespace schurlab
