#pragma once

// Determinantal identities for entrywise maps on rank-one matrices.
//
// Delta(t) = det f[a 1 + t u v^T] is computed three ways:
//   * directly, as the determinant of a matrix of truncated series;
//   * from the Schur-polynomial expansion
//       V(u) V(v) sum_{M} t^M sum_{m |- M strict} s_m(u) s_m(v) prod_k f_{m_k};
//   * for polynomial f, through the factorisation f[t u v^T] = U D W^T with
//     moment matrices U, W and diagonal D, summed by Cauchy-Binet.
// The Taylor coefficients f_M are taken around a, so Delta only depends on a
// through them.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/deriv_profile.hpp"
#include "schurlab/determinant.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/multipoly.hpp"
#include "schurlab/parallel.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/ring_matrix.hpp"
#include "schurlab/symmetric.hpp"
#include "schurlab/trunc_series.hpp"

namespace schurlab {

/// Taylor coefficients f_M of a function around `base_point`, so that
/// f^(k)(a) = k! f_k. With `polynomial` set, coefficients past the list are
/// zero; otherwise they are unknown and a longer request is an error.
template <class C>
struct SeriesFunction {
    Rational base_point{0};
    std::vector<C> coeffs;
    bool polynomial = false;

    int known_degree() const { return static_cast<int>(coeffs.size()) - 1; }

    C coefficient(int m) const {
        if (m < 0) throw InvalidInput("negative coefficient index");
        if (m <= known_degree()) return coeffs[static_cast<std::size_t>(m)];
        if (!polynomial)
            throw InvalidInput("insufficient coefficients: f_" + std::to_string(m) + " requested, only " +
                               std::to_string(coeffs.size()) + " known");
        return zero_like(coeffs.front());
    }

    TruncSeries<C> as_series(int cutoff) const {
        std::vector<C> out;
        for (int m = 0; m <= cutoff; ++m) out.push_back(coefficient(m));
        return TruncSeries<C>(cutoff, std::move(out), coeffs.front());
    }

    /// f^(k)(a) = k! f_k for k = 0..max_order.
    std::vector<C> derivatives(int max_order) const {
        std::vector<C> out;
        for (int k = 0; k <= max_order; ++k)
            out.push_back(scalar_like(factorial(static_cast<unsigned>(k)), coeffs.front()) * coefficient(k));
        return out;
    }

    /// Geometric series 1/(1-x) known through `cutoff`.
    static SeriesFunction geometric(int cutoff, const C& like) {
        return SeriesFunction{Rational(0), std::vector<C>(static_cast<std::size_t>(cutoff) + 1, one_like(like)), false};
    }

    /// (1 - c x)/(1 - x) = 1 + (1 - c) sum_{M>=1} x^M, known through `cutoff`.
    static SeriesFunction frobenius(const Rational& c, int cutoff, const C& like) {
        std::vector<C> out(static_cast<std::size_t>(cutoff) + 1, scalar_like(Rational(1) - c, like));
        out[0] = one_like(like);
        return SeriesFunction{Rational(0), std::move(out), false};
    }

    static SeriesFunction from_polynomial(std::vector<C> coeffs) {
        if (coeffs.empty()) throw InvalidInput("polynomial with no coefficients");
        return SeriesFunction{Rational(0), std::move(coeffs), true};
    }
};

/// Lifts rational coefficients into another carrier.
template <class C>
SeriesFunction<C> lift(const SeriesFunction<Rational>& f, const C& like) {
    SeriesFunction<C> out{f.base_point, {}, f.polynomial};
    for (const auto& c : f.coeffs) out.coeffs.push_back(scalar_like(c, like));
    return out;
}

template <class C>
RingMatrix<C> outer_product(std::span<const C> u, std::span<const C> v) {
    if (u.size() != v.size()) throw DimensionMismatch("outer_product: |u| != |v|");
    if (u.empty()) throw InvalidInput("outer_product: empty vectors");
    RingMatrix<C> b(u.size(), u[0]);
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < v.size(); ++k) b(j, k) = u[j] * v[k];
    return b;
}

/// Entry (j, k) is the series of f(t * B_jk), i.e. f composed with the
/// linear map t -> B_jk t.
template <class C>
RingMatrix<TruncSeries<C>> entrywise_apply(const SeriesFunction<C>& f, const RingMatrix<C>& scales, int cutoff) {
    if (cutoff <= 0) throw InvalidInput("entrywise_apply: cutoff must be positive");
    const TruncSeries<C> base = f.as_series(cutoff);
    RingMatrix<TruncSeries<C>> out(scales.size(), base);
    for (std::size_t j = 0; j < scales.size(); ++j)
        for (std::size_t k = 0; k < scales.size(); ++k) out(j, k) = series_compose_linear(base, scales(j, k));
    return out;
}

/// Truncated series of Delta(t) = det f[a 1 + t u v^T], by direct expansion.
template <class C>
TruncSeries<C> delta_series(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff) {
    if (u.size() != v.size()) throw DimensionMismatch("delta_series: |u| != |v|");
    return det_ring(entrywise_apply(f, outer_product(u, v), cutoff));
}

/// Schur polynomials s_m in n variables, built once per strict tuple by
/// tableau enumeration. Fill it before sharing across threads.
class SchurTable {
public:
    explicit SchurTable(std::size_t n) : n_(n) {}

    std::size_t num_vars() const { return n_; }

    /// Precomputes every strict n-part tuple of total at most max_total.
    void prepare(int max_total) {
        for (int m = 0; m <= max_total; ++m)
            for (const auto& p : enumerate_partitions_distinct(m, static_cast<int>(n_))) (void)get(p);
    }

    const MultiPoly& get(const PartitionTuple& m) {
        auto it = table_.find(m.parts());
        if (it == table_.end()) it = table_.emplace(m.parts(), schur_tableaux(m, n_).value).first;
        return it->second;
    }

    /// Read-only lookup; the tuple must have been prepared.
    const MultiPoly& at(const PartitionTuple& m) const { return table_.at(m.parts()); }

private:
    std::size_t n_;
    std::map<std::vector<int>, MultiPoly> table_;
};

namespace detail {

template <class C>
void check_uv(std::span<const C> u, std::span<const C> v, const char* op) {
    if (u.size() != v.size()) throw DimensionMismatch(std::string(op) + ": |u| != |v|");
    if (u.empty()) throw InvalidInput(std::string(op) + ": empty vectors");
}

/// Weight of one strict tuple in the graded Schur sum.
template <class C>
using TupleWeight = std::function<C(const PartitionTuple&)>;

/// sum_{m strict, |m| = degree} s_m(u) s_m(v) weight(m).
template <class C>
C schur_degree_sum(const SchurTable& table, int degree, std::span<const C> u, std::span<const C> v,
                   const TupleWeight<C>& weight) {
    const C& like = u[0];
    C acc = zero_like(like);
    for (const auto& m : enumerate_partitions_distinct(degree, static_cast<int>(u.size()))) {
        C w = weight(m);
        if (is_zero(w)) continue;
        const MultiPoly& s = table.at(m);
        acc = acc + evaluate(s, u, like) * evaluate(s, v, like) * w;
    }
    return acc;
}

/// Per-degree sums, parallel over degrees; the reduction is exact so the
/// result does not depend on scheduling.
template <class C>
TruncSeries<C> graded_schur_series(std::span<const C> u, std::span<const C> v, int cutoff,
                                   const TupleWeight<C>& weight, bool parallel) {
    SchurTable table(u.size());
    table.prepare(cutoff);
    const C& like = u[0];
    const C scale = vandermonde(u) * vandermonde(v);
    std::vector<C> coeffs(static_cast<std::size_t>(cutoff) + 1, zero_like(like));
    auto body = [&](std::size_t degree) {
        coeffs[degree] = scale * schur_degree_sum(table, static_cast<int>(degree), u, v, weight);
    };
    if (parallel)
        parallel_for(coeffs.size(), body);
    else
        for (std::size_t d = 0; d < coeffs.size(); ++d) body(d);
    return TruncSeries<C>(cutoff, std::move(coeffs), like);
}

template <class C>
TupleWeight<C> product_weight(const SeriesFunction<C>& f) {
    return [&f](const PartitionTuple& m) {
        C w = one_like(f.coeffs.front());
        for (int part : m.parts()) w = w * f.coefficient(part);
        return w;
    };
}

}  // namespace detail

/// V(u) V(v) sum_M t^M sum_{m |- M} s_m(u) s_m(v) prod_k f_{m_k}, with the
/// per-degree sums evaluated in parallel.
template <class C>
TruncSeries<C> tsymm_rhs(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff) {
    detail::check_uv(u, v, "tsymm_rhs");
    if (cutoff < 0) throw InvalidInput("tsymm_rhs: negative cutoff");
    (void)f.coefficient(cutoff);  // surfaces insufficient coefficients before the parallel region
    return detail::graded_schur_series<C>(u, v, cutoff, detail::product_weight(f), true);
}

/// Serial reference for tsymm_rhs.
template <class C>
TruncSeries<C> tsymm_rhs_serial(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff) {
    detail::check_uv(u, v, "tsymm_rhs");
    if (cutoff < 0) throw InvalidInput("tsymm_rhs: negative cutoff");
    return detail::graded_schur_series<C>(u, v, cutoff, detail::product_weight(f), false);
}

/// Delta^(M)(0) from the closed form
///   sum_{m |- M} multinomial(M; m) V(u) V(v) s_m(u) s_m(v) prod_k f^(m_k)(a),
/// where derivs[k] = f^(k)(a). Zero for M < n(n-1)/2.
template <class C>
C phorn_derivative(std::span<const C> derivs, bool tail_zero, std::span<const C> u, std::span<const C> v, int order) {
    detail::check_uv(u, v, "phorn_derivative");
    if (order < 0) throw InvalidInput("phorn_derivative: negative order");
    const C& like = u[0];
    auto deriv = [&](int k) -> C {
        if (k < static_cast<int>(derivs.size())) return derivs[static_cast<std::size_t>(k)];
        if (tail_zero) return zero_like(like);
        throw InvalidInput("phorn_derivative: missing derivative of order " + std::to_string(k));
    };
    const auto tuples = enumerate_partitions_distinct(order, static_cast<int>(u.size()));
    // Every order a tuple can use must be supplied, even when a factor
    // elsewhere in the product would vanish.
    if (!tuples.empty() && !tail_zero && static_cast<int>(derivs.size()) <= tuples.front().parts().front())
        throw InvalidInput("phorn_derivative: missing derivative of order " +
                           std::to_string(tuples.front().parts().front()));
    SchurTable table(u.size());
    C sum = zero_like(like);
    for (const auto& m : tuples) {
        C w = scalar_like(multinomial(static_cast<unsigned>(order), m.parts()), like);
        for (int part : m.parts()) w = w * deriv(part);
        if (is_zero(w)) continue;
        const MultiPoly& s = table.get(m);
        sum = sum + w * evaluate(s, u, like) * evaluate(s, v, like);
    }
    return vandermonde(u) * vandermonde(v) * sum;
}

template <class C>
C phorn_derivative(const DerivProfile<C>& profile, std::span<const C> u, std::span<const C> v, int order) {
    return phorn_derivative(std::span<const C>(profile.values), profile.tail_zero, u, v, order);
}

template <class C>
C pow_carrier(const C& x, int exponent) {
    C result = one_like(x);
    for (int i = 0; i < exponent; ++i) result = result * x;
    return result;
}

/// det f[t u v^T] for polynomial f through Cauchy-Binet on
/// (u_j^m)_{j,m} diag(f_m t^m) (v_k^m)_{k,m}^T: a sum over n-subsets S of
/// the support of det U_S det W_S prod_{m in S} f_m t^{|S|}.
template <class C>
TruncSeries<C> cauchy_binet_series(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff) {
    detail::check_uv(u, v, "cauchy_binet_series");
    if (!f.polynomial) throw InvalidInput("cauchy_binet_series: f must be a polynomial");
    if (cutoff < 0) throw InvalidInput("cauchy_binet_series: negative cutoff");
    const std::size_t n = u.size();
    const C& like = u[0];

    std::vector<int> support;
    for (int m = 0; m <= f.known_degree(); ++m)
        if (!is_zero(f.coeffs[static_cast<std::size_t>(m)])) support.push_back(m);

    std::vector<C> coeffs(static_cast<std::size_t>(cutoff) + 1, zero_like(like));
    if (support.size() < n) return TruncSeries<C>(cutoff, std::move(coeffs), like);

    auto minor = [&](std::span<const C> x, const std::vector<int>& cols) {
        RingMatrix<C> m(n, like);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) m(j, i) = pow_carrier(x[j], cols[i]);
        return det_ring(m);
    };

    // Lexicographic n-subsets of the support.
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    std::vector<int> cols(n);
    while (true) {
        int degree = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cols[i] = support[pick[i]];
            degree += cols[i];
        }
        if (degree <= cutoff) {
            C term = minor(u, cols) * minor(v, cols);
            for (int c : cols) term = term * f.coeffs[static_cast<std::size_t>(c)];
            coeffs[static_cast<std::size_t>(degree)] = coeffs[static_cast<std::size_t>(degree)] + term;
        }
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == support.size() - n + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return TruncSeries<C>(cutoff, std::move(coeffs), like);
}

/// Outcome of comparing two (or more) routes to the same coefficient list.
struct ExpansionReport {
    std::string identity;
    std::size_t n = 0;
    int cutoff = 0;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    /// Further independent routes compared against lhs, by name.
    std::vector<std::pair<std::string, std::vector<std::string>>> extra;
    std::optional<int> first_mismatch_degree;
    /// Every lhs coefficient of degree below this value is zero; equals
    /// min(n(n-1)/2, cutoff+1) when the vanishing statement holds.
    int vanishing_verified_below = 0;
    bool vanishing_holds = true;

    bool match() const { return !first_mismatch_degree.has_value() && vanishing_holds; }
};

template <class C>
using Renderer = std::function<std::string(const C&)>;

template <class C>
Renderer<C> default_renderer() {
    return [](const C& c) { return schurlab::to_string(c); };
}

/// Compares lhs against rhs and each extra route coefficientwise.
template <class C>
ExpansionReport compare_expansions(std::string identity, std::size_t n, const TruncSeries<C>& lhs,
                                   const TruncSeries<C>& rhs,
                                   const std::vector<std::pair<std::string, TruncSeries<C>>>& extra = {},
                                   Renderer<C> render = default_renderer<C>()) {
    ExpansionReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.cutoff = std::min(lhs.cutoff(), rhs.cutoff());
    for (const auto& [name, s] : extra) r.cutoff = std::min(r.cutoff, s.cutoff());

    auto render_all = [&](const TruncSeries<C>& s) {
        std::vector<std::string> out;
        for (int k = 0; k <= r.cutoff; ++k) out.push_back(render(s[k]));
        return out;
    };
    r.lhs = render_all(lhs);
    r.rhs = render_all(rhs);
    for (const auto& [name, s] : extra) r.extra.emplace_back(name, render_all(s));

    for (int k = 0; k <= r.cutoff && !r.first_mismatch_degree; ++k) {
        bool same = lhs[k] == rhs[k];
        for (const auto& [name, s] : extra) same = same && (lhs[k] == s[k]);
        if (!same) r.first_mismatch_degree = k;
    }

    const int threshold = static_cast<int>(n * (n - 1) / 2);
    const int check_below = std::min(threshold, r.cutoff + 1);
    r.vanishing_verified_below = check_below;
    for (int k = 0; k < check_below; ++k) {
        if (!is_zero(lhs[k])) {
            r.vanishing_verified_below = k;
            r.vanishing_holds = false;
            break;
        }
    }
    return r;
}

/// Direct determinant against the Schur expansion, plus the Cauchy-Binet
/// route when f is a polynomial.
template <class C>
ExpansionReport verify_tsymm(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff,
                             Renderer<C> render = default_renderer<C>()) {
    const TruncSeries<C> lhs = delta_series(f, u, v, cutoff);
    const TruncSeries<C> rhs = tsymm_rhs(f, u, v, cutoff);
    std::vector<std::pair<std::string, TruncSeries<C>>> extra;
    if (f.polynomial) extra.emplace_back("cauchy_binet", cauchy_binet_series(f, u, v, cutoff));
    return compare_expansions("tsymm", u.size(), lhs, rhs, extra, std::move(render));
}

/// f = 1/(1-x): the classical Cauchy determinant against
/// V(u) V(v) sum_m s_m(u) s_m(v).
template <class C>
ExpansionReport verify_cauchy(std::span<const C> u, std::span<const C> v, int cutoff,
                              Renderer<C> render = default_renderer<C>()) {
    detail::check_uv(u, v, "verify_cauchy");
    const auto f = SeriesFunction<C>::geometric(cutoff, u[0]);
    const TruncSeries<C> lhs = delta_series(f, u, v, cutoff);
    const detail::TupleWeight<C> unit = [&](const PartitionTuple&) { return one_like(u[0]); };
    const TruncSeries<C> rhs = detail::graded_schur_series<C>(u, v, cutoff, unit, true);
    return compare_expansions("cauchy", u.size(), lhs, rhs, {}, std::move(render));
}

/// f = (1 - c x)/(1 - x). Compares the direct determinant with the
/// regrouped form
///   V(u) V(v) (1-c)^{n-1} ( sum_{m_0 = 0} s s + (1-c) sum_{m_0 > 0} s s )
/// (rhs) and with the general Schur expansion (extra "tsymm").
template <class C>
ExpansionReport verify_frobenius(const Rational& c, std::span<const C> u, std::span<const C> v, int cutoff,
                                 Renderer<C> render = default_renderer<C>()) {
    detail::check_uv(u, v, "verify_frobenius");
    const C& like = u[0];
    const std::size_t n = u.size();
    const auto f = SeriesFunction<C>::frobenius(c, cutoff, like);
    const TruncSeries<C> lhs = delta_series(f, u, v, cutoff);

    const Rational one_minus_c = Rational(1) - c;
    const C with_zero_part = scalar_like(pow(one_minus_c, static_cast<unsigned>(n - 1)), like);
    const C without_zero_part = scalar_like(pow(one_minus_c, static_cast<unsigned>(n)), like);
    const detail::TupleWeight<C> regrouped = [&](const PartitionTuple& m) {
        return m.parts().back() == 0 ? with_zero_part : without_zero_part;
    };
    const TruncSeries<C> rhs = detail::graded_schur_series<C>(u, v, cutoff, regrouped, true);

    std::vector<std::pair<std::string, TruncSeries<C>>> extra;
    extra.emplace_back("tsymm", tsymm_rhs(f, u, v, cutoff));
    return compare_expansions("frobenius", n, lhs, rhs, extra, std::move(render));
}

/// Symbolic u = (u1..un), v = (v1..vn) in the 2n-variable polynomial ring.
std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> symbolic_uv(std::size_t n);

/// Renders 2n-variable polynomials with the u/v names.
Renderer<MultiPoly> uv_renderer(std::size_t n);

}  // namespace schurlab
