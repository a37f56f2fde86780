#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/deriv_profile.hpp"
#include "schurlab/psd.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/ring_matrix.hpp"

namespace schurlab {

/// The test family a 1 + t u u^T, t in [0, epsilon).
///
/// Checked construction enforces a >= 0, epsilon > 0 and pairwise distinct
/// u_k in (0, 1). The relaxed constructor only asks for distinct positive
/// u_k; reports built on it are not labelled as testing the theorem's
/// hypothesis.
struct TestFamily {
    Rational a;
    Rational epsilon;
    std::vector<Rational> u;
    bool relaxed = false;

    std::size_t n() const { return u.size(); }

    static TestFamily make(Rational a, Rational epsilon, std::vector<Rational> u);
    static TestFamily make_relaxed(Rational a, Rational epsilon, std::vector<Rational> u);

    /// Geometric choice u_k = (1/2)^k, k = 1..n.
    static std::vector<Rational> geometric_u(std::size_t n, const Rational& ratio = Rational(1, 2));
};

/// Entry (j, k) = a + t u_j u_k.
RingMatrix<Rational> build_test_matrix(const Rational& a, const Rational& t, const std::vector<Rational>& u);
RingMatrix<double> build_test_matrix(double a, double t, const std::vector<double>& u);

/// `size` uniform points 0 = t_0 < ... < t_{size-1} = epsilon (1 - 10^-6).
std::vector<Rational> t_grid(const Rational& epsilon, std::size_t size);

inline constexpr std::size_t kDefaultGridSize = 200;

/// Per-order sign check of f^(k)(a) for k <= m_{q-1}.
struct ConclusionReport {
    int p = 0;
    int q = 0;
    int q_effective = 0;      // q reduced when fewer nonzero derivatives exist
    bool reduced = false;
    std::vector<int> orders;  // m_0 .. m_{q_effective-1}
    std::vector<int> signs;   // sign of f^(k)(a) for k = 0..m_{q_effective-1}
    bool nonnegative = true;  // every f^(k)(a) >= 0 for k <= m_{q-1}
    bool strictly_positive = true;  // every nonzero listed order is > 0
    std::optional<int> first_failure;

    bool pass() const { return nonnegative && strictly_positive; }
};

/// m_0..m_{p-1} = 0..p-1 and m_p < ... < m_{q-1} the first q-p nonzero
/// derivative orders >= p; checks f^(k)(a) >= 0 for every k <= m_{q-1}.
/// Fewer nonzero derivatives than q-p reduce q (reported, not an error).
template <class T>
ConclusionReport hl_conclusion_check(const DerivProfile<T>& profile, int n, int p, int q);

/// Maclaurin sign rule: each negative coefficient needs at least n strictly
/// positive ones at lower degree; on an unbounded domain also at higher
/// degree, checked by running the same rule on the reversed polynomial
/// x^d f(1/x).
enum class Domain { bounded, unbounded };

struct MaclaurinVerdict {
    bool pass = true;
    std::optional<std::size_t> first_offending_index;  // index into the original coefficients
    bool from_reversal = false;
};

MaclaurinVerdict maclaurin_sign_check(const std::vector<Rational>& coeffs, int n, Domain domain);

/// Whether x^alpha preserves positivity on n x n PSD matrices with positive
/// entries: alpha a non-negative integer (within 1e-12) or alpha >= n-2.
bool fh_predict(double alpha, int n);

struct Violation {
    Rational t;
    double margin = 0.0;       // min eigenvalue (numeric) or min e_k (exact)
    std::string margin_exact;  // exact path only
    double threshold = 0.0;    // numeric path: -tol (1 + ||A||_F)
};

struct PreserverReport {
    TestFamily family;
    std::vector<Rational> grid;
    std::string psd_method;
    std::vector<Violation> violations;
    std::optional<ConclusionReport> conclusion;
    std::optional<MaclaurinVerdict> maclaurin;

    /// No violation on the grid. A grid can only falsify, so this is
    /// "certified on grid", not a proof of the hypothesis.
    bool certified_on_grid() const { return violations.empty(); }
    bool pass() const {
        return certified_on_grid() && (!conclusion || conclusion->pass()) && (!maclaurin || maclaurin->pass);
    }
};

/// Exact scan for polynomial f(x) = sum c_i x^i: each grid matrix
/// f[a 1 + t u u^T] is certified with the characteristic-polynomial test.
/// Grid points are processed in parallel.
PreserverReport hl_hypothesis_scan(const std::vector<Rational>& poly, const TestFamily& family,
                                   const std::vector<Rational>& grid);
PreserverReport hl_hypothesis_scan_serial(const std::vector<Rational>& poly, const TestFamily& family,
                                          const std::vector<Rational>& grid);

/// Numeric scan for an evaluation oracle, with the Jacobi eigenvalue test.
using RealFunction = std::function<double(double)>;
PreserverReport hl_hypothesis_scan(const RealFunction& f, const TestFamily& family, const std::vector<Rational>& grid,
                                   double tol = kDefaultPsdTolerance);
PreserverReport hl_hypothesis_scan_serial(const RealFunction& f, const TestFamily& family,
                                          const std::vector<Rational>& grid, double tol = kDefaultPsdTolerance);

/// Evaluates sum c_i x^i exactly.
Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace schurlab
