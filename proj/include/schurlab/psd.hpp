#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurlab/rational.hpp"
#include "schurlab/ring_matrix.hpp"

namespace schurlab {

/// Positive-semidefiniteness verdict with its certificate.
///
/// Exact path: `char_coeffs` holds e_1..e_n, the signed coefficients of
/// det(xI - A) = sum_k (-1)^k e_k x^{n-k}; a real symmetric matrix is PSD
/// iff all e_k >= 0. Numeric path: `min_eigenvalue` and the threshold it was
/// compared with.
struct PsdVerdict {
    bool is_psd = false;
    std::vector<Rational> char_coeffs;
    std::optional<double> min_eigenvalue;
    double threshold = 0.0;
    std::string method;  // "charpoly-exact" or "jacobi-numeric"

    /// Smallest e_k (exact path); the margin reported for violations.
    Rational min_char_coeff() const;
};

/// Characteristic polynomial coefficients c_0..c_n of det(xI - A) (c_n = 1)
/// by Faddeev-LeVerrier in exact arithmetic.
std::vector<Rational> characteristic_polynomial(const RingMatrix<Rational>& a);

PsdVerdict is_psd_exact(const RingMatrix<Rational>& a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(const RingMatrix<double>& a);

inline constexpr double kDefaultPsdTolerance = 1e-9;

/// PSD iff min eigenvalue >= -tol (1 + ||A||_F).
PsdVerdict is_psd_numeric(const RingMatrix<double>& a, double tol = kDefaultPsdTolerance);

double frobenius_norm(const RingMatrix<double>& a);

}  // namespace schurlab
