#include "schurlab/preserver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "schurlab/errors.hpp"
#include "schurlab/parallel.hpp"

namespace schurlab {

namespace {

void require_distinct(const std::vector<Rational>& u) {
    std::set<Rational> seen(u.begin(), u.end());
    if (seen.size() != u.size()) throw InvalidInput("test family: u coordinates must be pairwise distinct");
}

void require_family_scalars(const Rational& a, const Rational& epsilon, const std::vector<Rational>& u) {
    if (a.sign() < 0) throw InvalidInput("test family: a must be non-negative");
    if (epsilon.sign() <= 0) throw InvalidInput("test family: epsilon must be positive");
    if (u.empty()) throw InvalidInput("test family: u must be non-empty");
}

}  // namespace

TestFamily TestFamily::make(Rational a, Rational epsilon, std::vector<Rational> u) {
    require_family_scalars(a, epsilon, u);
    for (const auto& x : u)
        if (x.sign() <= 0 || x >= Rational(1))
            throw InvalidInput("test family: u coordinates must lie in (0,1), got " + x.to_string());
    require_distinct(u);
    return TestFamily{std::move(a), std::move(epsilon), std::move(u), false};
}

TestFamily TestFamily::make_relaxed(Rational a, Rational epsilon, std::vector<Rational> u) {
    require_family_scalars(a, epsilon, u);
    for (const auto& x : u)
        if (x.sign() <= 0) throw InvalidInput("test family: u coordinates must be positive");
    require_distinct(u);
    return TestFamily{std::move(a), std::move(epsilon), std::move(u), true};
}

std::vector<Rational> TestFamily::geometric_u(std::size_t n, const Rational& ratio) {
    std::vector<Rational> u;
    Rational x = ratio;
    for (std::size_t k = 0; k < n; ++k) {
        u.push_back(x);
        x *= ratio;
    }
    return u;
}

RingMatrix<Rational> build_test_matrix(const Rational& a, const Rational& t, const std::vector<Rational>& u) {
    if (t.sign() < 0) throw InvalidInput("build_test_matrix: t must be non-negative");
    RingMatrix<Rational> m(u.size(), Rational(0));
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < u.size(); ++k) m(j, k) = a + t * u[j] * u[k];
    return m;
}

RingMatrix<double> build_test_matrix(double a, double t, const std::vector<double>& u) {
    if (t < 0) throw InvalidInput("build_test_matrix: t must be non-negative");
    RingMatrix<double> m(u.size(), 0.0);
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < u.size(); ++k) m(j, k) = a + t * u[j] * u[k];
    return m;
}

std::vector<Rational> t_grid(const Rational& epsilon, std::size_t size) {
    if (size == 0) throw InvalidInput("t_grid: empty grid");
    const Rational top = epsilon * Rational(999999, 1000000);
    std::vector<Rational> grid;
    grid.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        grid.push_back(size == 1 ? Rational(0) : top * Rational(static_cast<long>(i), static_cast<long>(size - 1)));
    return grid;
}

template <class T>
ConclusionReport hl_conclusion_check(const DerivProfile<T>& profile, int n, int p, int q) {
    if (n < 1) throw InvalidInput("hl_conclusion_check: n must be positive");
    if (p < 0 || p > q || q > n) throw InvalidInput("hl_conclusion_check: need 0 <= p <= q <= n");
    bool base_is_zero;
    if constexpr (std::is_same_v<T, double>)
        base_is_zero = profile.base_point == 0.0;
    else
        base_is_zero = profile.base_point.is_zero();
    if (base_is_zero && p != 0) throw InvalidInput("hl_conclusion_check: p must be 0 when a = 0");
    if (p > 0 && profile.max_order() < p - 1) throw UndecidableProfile("hl_conclusion_check: profile shorter than p");

    ConclusionReport r;
    r.p = p;
    r.q = q;
    for (int k = 0; k < p; ++k) r.orders.push_back(k);
    const auto nonzero = profile.nonzero_orders(p);
    const int wanted = q - p;
    const int found = std::min<int>(wanted, static_cast<int>(nonzero.size()));
    r.orders.insert(r.orders.end(), nonzero.begin(), nonzero.begin() + found);
    r.reduced = found < wanted;
    r.q_effective = p + found;
    if (r.orders.empty()) return r;

    const int last = r.orders.back();
    for (int k = 0; k <= last; ++k) {
        const int s = profile.sign_at(k);
        r.signs.push_back(s);
        if (s < 0 && !r.first_failure) {
            r.first_failure = k;
            r.nonnegative = false;
        }
    }
    for (int m : r.orders) {
        const int s = r.signs[static_cast<std::size_t>(m)];
        if (s < 0) r.strictly_positive = false;
    }
    return r;
}

template ConclusionReport hl_conclusion_check(const DerivProfile<Rational>&, int, int, int);
template ConclusionReport hl_conclusion_check(const DerivProfile<double>&, int, int, int);

namespace {

std::optional<std::size_t> first_unsupported_negative(const std::vector<Rational>& coeffs, int n) {
    int positives = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].sign() < 0 && positives < n) return i;
        if (coeffs[i].sign() > 0) ++positives;
    }
    return std::nullopt;
}

}  // namespace

MaclaurinVerdict maclaurin_sign_check(const std::vector<Rational>& coeffs, int n, Domain domain) {
    if (n < 1) throw InvalidInput("maclaurin_sign_check: n must be positive");
    MaclaurinVerdict v;
    if (auto bad = first_unsupported_negative(coeffs, n)) {
        v.pass = false;
        v.first_offending_index = bad;
        return v;
    }
    if (domain == Domain::unbounded) {
        std::size_t degree = coeffs.size();
        while (degree > 0 && coeffs[degree - 1].is_zero()) --degree;
        std::vector<Rational> reversed(coeffs.begin(), coeffs.begin() + static_cast<long>(degree));
        std::reverse(reversed.begin(), reversed.end());
        if (auto bad = first_unsupported_negative(reversed, n)) {
            v.pass = false;
            v.from_reversal = true;
            v.first_offending_index = degree - 1 - *bad;
        }
    }
    return v;
}

bool fh_predict(double alpha, int n) {
    if (n < 1) throw InvalidInput("fh_predict: n must be positive");
    if (!(alpha >= 0)) throw InvalidInput("fh_predict: alpha must be non-negative");
    if (std::abs(alpha - std::round(alpha)) <= 1e-12) return true;
    return alpha >= static_cast<double>(n - 2);
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

using GridCheck = std::function<std::optional<Violation>(const Rational&)>;

std::vector<Violation> run_grid(const std::vector<Rational>& grid, const GridCheck& check, bool parallel) {
    std::vector<std::optional<Violation>> slots(grid.size());
    auto body = [&](std::size_t i) { slots[i] = check(grid[i]); };
    if (parallel)
        parallel_for(grid.size(), body);
    else
        for (std::size_t i = 0; i < grid.size(); ++i) body(i);
    std::vector<Violation> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

void require_grid(const TestFamily& family, const std::vector<Rational>& grid) {
    if (grid.empty()) throw InvalidInput("scan: empty t grid");
    for (const auto& t : grid)
        if (t.sign() < 0 || t >= family.epsilon) throw InvalidInput("scan: grid point " + t.to_string() + " outside [0, epsilon)");
}

PreserverReport exact_scan(const std::vector<Rational>& poly, const TestFamily& family,
                           const std::vector<Rational>& grid, bool parallel) {
    if (poly.empty()) throw InvalidInput("scan: polynomial with no coefficients");
    require_grid(family, grid);
    PreserverReport report{family, grid, "charpoly-exact", {}, std::nullopt, std::nullopt};
    const GridCheck check = [&](const Rational& t) -> std::optional<Violation> {
        RingMatrix<Rational> m = build_test_matrix(family.a, t, family.u);
        for (std::size_t j = 0; j < m.size(); ++j)
            for (std::size_t k = 0; k < m.size(); ++k) m(j, k) = evaluate_polynomial(poly, m(j, k));
        const PsdVerdict v = is_psd_exact(m);
        if (v.is_psd) return std::nullopt;
        const Rational margin = v.min_char_coeff();
        return Violation{t, margin.to_double(), margin.to_string(), 0.0};
    };
    report.violations = run_grid(grid, check, parallel);
    return report;
}

PreserverReport numeric_scan(const RealFunction& f, const TestFamily& family, const std::vector<Rational>& grid,
                             double tol, bool parallel) {
    require_grid(family, grid);
    std::vector<double> u;
    for (const auto& x : family.u) u.push_back(x.to_double());
    const double a = family.a.to_double();
    PreserverReport report{family, grid, "jacobi-numeric", {}, std::nullopt, std::nullopt};
    const GridCheck check = [&](const Rational& t) -> std::optional<Violation> {
        RingMatrix<double> m = build_test_matrix(a, t.to_double(), u);
        for (std::size_t j = 0; j < m.size(); ++j) {
            for (std::size_t k = 0; k < m.size(); ++k) {
                const double x = m(j, k);
                m(j, k) = f(x);
                if (!std::isfinite(m(j, k)))
                    throw InvalidInput("scan: evaluation failure at x = " + std::to_string(x) + " (t = " + t.to_string() + ")");
            }
        }
        const PsdVerdict v = is_psd_numeric(m, tol);
        if (v.is_psd) return std::nullopt;
        return Violation{t, *v.min_eigenvalue, {}, v.threshold};
    };
    report.violations = run_grid(grid, check, parallel);
    return report;
}

}  // namespace

PreserverReport hl_hypothesis_scan(const std::vector<Rational>& poly, const TestFamily& family,
                                   const std::vector<Rational>& grid) {
    return exact_scan(poly, family, grid, true);
}

PreserverReport hl_hypothesis_scan_serial(const std::vector<Rational>& poly, const TestFamily& family,
                                          const std::vector<Rational>& grid) {
    return exact_scan(poly, family, grid, false);
}

PreserverReport hl_hypothesis_scan(const RealFunction& f, const TestFamily& family, const std::vector<Rational>& grid,
                                   double tol) {
    return numeric_scan(f, family, grid, tol, true);
}

PreserverReport hl_hypothesis_scan_serial(const RealFunction& f, const TestFamily& family,
                                          const std::vector<Rational>& grid, double tol) {
    return numeric_scan(f, family, grid, tol, false);
}

}  // namespace schurlab
