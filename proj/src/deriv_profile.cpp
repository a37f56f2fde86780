#include "schurlab/deriv_profile.hpp"

namespace schurlab {

ExactProfile polynomial_profile(const std::vector<Rational>& coeffs, const Rational& a) {
    ExactProfile p;
    p.base_point = a;
    p.tail_zero = true;
    const int degree = static_cast<int>(coeffs.size()) - 1;
    for (int k = 0; k <= std::max(degree, 0); ++k) {
        // f^(k)(a) = sum_{j>=k} c_j j!/(j-k)! a^{j-k}
        Rational v(0);
        for (int j = k; j <= degree; ++j) {
            if (coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
            v += coeffs[static_cast<std::size_t>(j)] * (factorial(static_cast<unsigned>(j)) / factorial(static_cast<unsigned>(j - k))) *
                 pow(a, static_cast<unsigned>(j - k));
        }
        p.values.push_back(v);
    }
    return p;
}

ExactProfile exp_profile(int max_order) {
    ExactProfile p;
    p.values.assign(static_cast<std::size_t>(max_order) + 1, Rational(1));
    return p;
}

ExactProfile monomial_profile(int k, const Rational& c) {
    if (k < 0) throw InvalidInput("monomial_profile: negative degree");
    ExactProfile p;
    p.tail_zero = true;
    p.values.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.values.back() = factorial(static_cast<unsigned>(k)) * c;
    return p;
}

}  // namespace schurlab
