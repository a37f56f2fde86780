#include "schurlab/psd.hpp"

#include <algorithm>
#include <cmath>

#include "schurlab/bounds.hpp"
#include "schurlab/errors.hpp"

namespace schurlab {

Rational PsdVerdict::min_char_coeff() const {
    if (char_coeffs.empty()) return Rational(0);
    return *std::min_element(char_coeffs.begin(), char_coeffs.end());
}

std::vector<Rational> characteristic_polynomial(const RingMatrix<Rational>& a) {
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k, with M_0 = 0.
    RingMatrix<Rational> m(n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        RingMatrix<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t l = 0; l < n; ++l)
                    if (!a(i, l).is_zero() && !m(l, j).is_zero()) s += a(i, l) * m(l, j);
                next(i, j) = s;
            }
            next(i, i) += c[n - k + 1];
        }
        m = std::move(next);
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * m(l, i);
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return c;
}

PsdVerdict is_psd_exact(const RingMatrix<Rational>& a) {
    if (a.size() == 0) throw InvalidInput("is_psd_exact: empty matrix");
    if (a.size() > 8) throw BoundExceeded("is_psd_exact: dimension above 8");
    if (!a.is_symmetric()) throw InvalidInput("is_psd_exact: matrix is not symmetric");
    const std::size_t n = a.size();
    const auto c = characteristic_polynomial(a);
    PsdVerdict v;
    v.method = "charpoly-exact";
    v.is_psd = true;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational e = c[n - k];
        if (k % 2 == 1) e = -e;
        if (e.sign() < 0) v.is_psd = false;
        v.char_coeffs.push_back(e);
    }
    return v;
}

double frobenius_norm(const RingMatrix<double>& a) {
    double s = 0.0;
    for (double x : a.entries()) s += x * x;
    return std::sqrt(s);
}

std::vector<double> jacobi_eigenvalues(const RingMatrix<double>& a) {
    const std::size_t n = a.size();
    RingMatrix<double> m = a;
    const double norm = frobenius_norm(a);
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += m(i, j) * m(i, j);
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-13 * norm; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p);
                    const double mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k);
                    const double mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

PsdVerdict is_psd_numeric(const RingMatrix<double>& a, double tol) {
    if (a.size() == 0) throw InvalidInput("is_psd_numeric: empty matrix");
    double scale = 0.0;
    for (double x : a.entries()) {
        if (!std::isfinite(x)) throw InvalidInput("is_psd_numeric: non-finite entry");
        scale = std::max(scale, std::abs(x));
    }
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = j + 1; k < a.size(); ++k)
            if (std::abs(a(j, k) - a(k, j)) > 1e-12 * std::max(scale, 1.0))
                throw InvalidInput("is_psd_numeric: matrix is not symmetric");
    PsdVerdict v;
    v.method = "jacobi-numeric";
    const auto eig = jacobi_eigenvalues(a);
    v.min_eigenvalue = eig.front();
    v.threshold = -tol * (1.0 + frobenius_norm(a));
    v.is_psd = eig.front() >= v.threshold;
    return v;
}

}  // namespace schurlab
